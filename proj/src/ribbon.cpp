#include <matint/ribbon.hpp>

#include <algorithm>
#include <unordered_set>

#include <matint/errors.hpp>
#include <matint/wick.hpp>

namespace matint::ribbon {

void validate(const RibbonGraph& g) {
    const int n = g.half_edges();
    if (static_cast<int>(g.pairing.size()) != n)
        throw std::invalid_argument("RibbonGraph: rotation/pairing size mismatch");
    std::vector<char> hit(n, 0);
    for (int h = 0; h < n; ++h) {
        if (g.rotation[h] < 0 || g.rotation[h] >= n)
            throw std::invalid_argument("RibbonGraph: rotation out of range");
        hit[g.rotation[h]] = 1;
    }
    for (int h = 0; h < n; ++h)
        if (!hit[h]) throw std::invalid_argument("RibbonGraph: rotation is not a permutation");
    for (int h = 0; h < n; ++h) {
        const int p = g.pairing[h];
        if (p < 0 || p >= n || p == h || g.pairing[p] != h)
            throw std::invalid_argument("RibbonGraph: pairing is not a fixed-point-free involution");
    }
}

RibbonGraph from_profile_and_pairing(const DegreeProfile& profile, const PairingScheme& scheme) {
    RibbonGraph g{standard_rotation(profile), scheme.partner};
    validate(g);
    return g;
}

namespace {

std::vector<std::vector<int>> rotation_cycles(const std::vector<int>& rot) {
    const int n = static_cast<int>(rot.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> cycles;
    for (int h = 0; h < n; ++h) {
        if (seen[h]) continue;
        std::vector<int> cyc;
        int x = h;
        while (!seen[x]) {
            seen[x] = 1;
            cyc.push_back(x);
            x = rot[x];
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

// Consecutive blocks of the standard layout, degrees ascending, plus the
// ranges of equal-degree blocks (the swap classes of the acting group).
struct BlockLayout {
    std::vector<int> start;   // block index -> first half-edge
    std::vector<int> degree;  // block index -> degree
    std::vector<std::pair<int, int>> classes;  // [first_block, last_block) per degree

    explicit BlockLayout(const DegreeProfile& profile) {
        int d = 0, blk = 0;
        for (const auto& [j, v] : profile.counts()) {
            classes.emplace_back(blk, blk + v);
            for (int i = 0; i < v; ++i) {
                start.push_back(d);
                degree.push_back(j);
                d += j;
                ++blk;
            }
        }
    }

    int blocks() const { return static_cast<int>(start.size()); }
};

// Visits every element of prod_j S_{v_j} x (Z/jZ)^{v_j} as a half-edge
// relabeling map.
template <class F>
void for_each_group_element(const BlockLayout& L, int dots, F&& visit) {
    const int nb = L.blocks();
    std::vector<int> target(nb);   // block -> image block (same degree)
    std::vector<int> rho(nb, 0);   // block -> rotation offset
    std::vector<int> map(dots);

    auto emit = [&]() {
        for (int b = 0; b < nb; ++b) {
            const int j = L.degree[b];
            const int src = L.start[b];
            const int dst = L.start[target[b]];
            for (int r = 0; r < j; ++r) map[src + r] = dst + (r + rho[b]) % j;
        }
        visit(const_cast<const std::vector<int>&>(map));
    };

    auto rotations = [&](auto&& self, int b) -> void {
        if (b == nb) {
            emit();
            return;
        }
        for (rho[b] = 0; rho[b] < L.degree[b]; ++rho[b]) self(self, b + 1);
        rho[b] = 0;
    };

    auto perms = [&](auto&& self, std::size_t cls) -> void {
        if (cls == L.classes.size()) {
            rotations(rotations, 0);
            return;
        }
        const auto [lo, hi] = L.classes[cls];
        std::vector<int> perm(hi - lo);
        std::iota(perm.begin(), perm.end(), lo);
        do {
            for (int i = lo; i < hi; ++i) target[i] = perm[i - lo];
            self(self, cls + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };

    perms(perms, 0);
}

void apply_map(const std::vector<int>& map, const std::vector<int>& pairing,
               std::vector<int>& out) {
    const int n = static_cast<int>(pairing.size());
    for (int h = 0; h < n; ++h) out[map[h]] = map[pairing[h]];
}

std::uint64_t encode_pairing(const std::vector<int>& pairing) {
    // 4 bits per entry; callers guarantee at most 16 half-edges
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < pairing.size(); ++i)
        code |= static_cast<std::uint64_t>(pairing[i]) << (4 * i);
    return code;
}

// Relabels an arbitrary ribbon graph onto the standard block layout of its
// profile. The residual freedom is exactly the acting group's orbit.
RibbonGraph to_standard_layout(const RibbonGraph& g) {
    auto cycles = rotation_cycles(g.rotation);
    for (auto& c : cycles) {
        // start each cycle at its smallest half-edge
        auto mn = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), mn, c.end());
    }
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    const int n = g.half_edges();
    std::vector<int> relabel(n);
    int next = 0;
    for (const auto& c : cycles)
        for (int h : c) relabel[h] = next++;
    RibbonGraph out;
    out.rotation = standard_rotation(profile_of(g));
    out.pairing.assign(n, -1);
    for (int h = 0; h < n; ++h) out.pairing[relabel[h]] = relabel[g.pairing[h]];
    return out;
}

// Counts group elements commuting with the pairing by assigning per-block
// images and rotations, pruning on any half-edge whose partner's block is
// already assigned.
struct AutSearch {
    const BlockLayout& L;
    const std::vector<int>& pairing;
    std::vector<int> target;      // block -> image block, -1 unassigned
    std::vector<int> rho;         // block -> rotation offset
    std::vector<char> used;       // image blocks taken
    std::vector<int> block_of;    // half-edge -> block
    std::uint64_t found = 0;

    AutSearch(const BlockLayout& layout, const std::vector<int>& eps)
        : L(layout), pairing(eps), target(layout.blocks(), -1), rho(layout.blocks(), 0),
          used(layout.blocks(), 0), block_of(eps.size()) {
        for (int b = 0; b < L.blocks(); ++b)
            for (int r = 0; r < L.degree[b]; ++r) block_of[L.start[b] + r] = b;
    }

    int image(int h) const {
        const int b = block_of[h];
        return L.start[target[b]] + (h - L.start[b] + rho[b]) % L.degree[b];
    }

    bool consistent(int b) const {
        for (int r = 0; r < L.degree[b]; ++r) {
            const int h = L.start[b] + r;
            const int p = pairing[h];
            if (target[block_of[p]] < 0) continue;
            if (pairing[image(h)] != image(p)) return false;
        }
        return true;
    }

    void run(int b) {
        if (b == L.blocks()) {
            ++found;
            return;
        }
        // same-degree images only: find the class containing b
        for (const auto& [lo, hi] : L.classes) {
            if (b < lo || b >= hi) continue;
            for (int t = lo; t < hi; ++t) {
                if (used[t]) continue;
                used[t] = 1;
                target[b] = t;
                for (rho[b] = 0; rho[b] < L.degree[b]; ++rho[b])
                    if (consistent(b)) run(b + 1);
                rho[b] = 0;
                target[b] = -1;
                used[t] = 0;
            }
            break;
        }
    }
};

}  // namespace

DegreeProfile profile_of(const RibbonGraph& g) {
    std::map<int, int> counts;
    for (const auto& c : rotation_cycles(g.rotation)) counts[static_cast<int>(c.size())] += 1;
    return DegreeProfile(counts);
}

int boundary_components(const RibbonGraph& g) {
    validate(g);
    return boundary_cycle_count(g.rotation, g.pairing);
}

bool is_connected(const RibbonGraph& g) {
    validate(g);
    return pairing_connected(g.rotation, g.pairing);
}

std::pair<int, int> genus(const RibbonGraph& g) {
    if (g.half_edges() == 0) throw std::invalid_argument("genus: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("genus: disconnected graph");
    const int v = static_cast<int>(rotation_cycles(g.rotation).size());
    const int e = g.half_edges() / 2;
    const int b = boundary_cycle_count(g.rotation, g.pairing);
    const int twice_g = 2 - v + e - b;
    if (twice_g < 0 || twice_g % 2 != 0)
        throw std::logic_error("genus: corrupted graph (non-integer or negative genus)");
    return {twice_g / 2, b};
}

std::uint64_t aut_order(const RibbonGraph& g, std::uint64_t direct_iteration_cap) {
    validate(g);
    if (g.half_edges() == 0) return 1;
    const RibbonGraph std_g = to_standard_layout(g);
    const DegreeProfile profile = profile_of(std_g);
    const BlockLayout layout(profile);
    const std::uint64_t order = profile.cyclic_group_order();
    if (order <= direct_iteration_cap) {
        std::uint64_t fixed = 0;
        std::vector<int> image(std_g.half_edges());
        for_each_group_element(layout, std_g.half_edges(), [&](const std::vector<int>& map) {
            apply_map(map, std_g.pairing, image);
            if (image == std_g.pairing) ++fixed;
        });
        return fixed;
    }
    AutSearch search(layout, std_g.pairing);
    search.run(0);
    return search.found;
}

RibbonGraph canonical_form(const RibbonGraph& g) {
    validate(g);
    if (g.half_edges() == 0) return g;
    RibbonGraph std_g = to_standard_layout(g);
    const BlockLayout layout(profile_of(std_g));
    std::vector<int> best = std_g.pairing;
    std::vector<int> image(std_g.half_edges());
    for_each_group_element(layout, std_g.half_edges(), [&](const std::vector<int>& map) {
        apply_map(map, std_g.pairing, image);
        if (image < best) best = image;
    });
    return RibbonGraph{std::move(std_g.rotation), std::move(best)};
}

std::vector<RibbonClass> enumerate_classes(const DegreeProfile& profile, bool connected_only,
                                           int budget_half_edges) {
    const int dots = profile.half_edges();
    if (dots > budget_half_edges || dots > 16)
        throw BudgetExceeded("enumerate_classes: profile " + profile.str() + " needs " +
                             std::to_string(dots) + " half-edges");
    std::vector<RibbonClass> classes;
    if (dots % 2 != 0) return classes;
    const std::vector<int> rot = standard_rotation(profile);
    if (dots == 0) {
        RibbonClass empty;
        empty.connected = true;
        classes.push_back(empty);
        return classes;
    }

    const BlockLayout layout(profile);
    const std::uint64_t group = profile.cyclic_group_order();
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t orbit_total = 0;

    for_each_matching(dots, [&](const std::vector<int>& pairing) {
        if (seen.count(encode_pairing(pairing))) return;
        // new isomorphism class: sweep its whole orbit
        std::unordered_set<std::uint64_t> orbit;
        std::vector<int> best = pairing;
        std::vector<int> image(dots);
        for_each_group_element(layout, dots, [&](const std::vector<int>& map) {
            apply_map(map, pairing, image);
            orbit.insert(encode_pairing(image));
            if (image < best) best = image;
        });
        seen.insert(orbit.begin(), orbit.end());
        orbit_total += orbit.size();

        RibbonClass cls;
        cls.canonical = RibbonGraph{rot, best};
        cls.aut = group / orbit.size();
        cls.boundary = boundary_cycle_count(rot, best);
        cls.vertices = profile.vertices();
        cls.edges = dots / 2;
        cls.connected = pairing_connected(rot, best);
        cls.genus = cls.connected ? (2 - cls.vertices + cls.edges - cls.boundary) / 2 : -1;
        if (group % orbit.size() != 0)
            throw std::logic_error("enumerate_classes: orbit size does not divide group order");
        classes.push_back(std::move(cls));
    });

    if (orbit_total != matching_count(dots))
        throw std::logic_error("enumerate_classes: orbits do not partition the matchings");

    if (connected_only)
        std::erase_if(classes, [](const RibbonClass& c) { return !c.connected; });
    std::sort(classes.begin(), classes.end(), [](const RibbonClass& a, const RibbonClass& b) {
        return a.canonical.pairing < b.canonical.pairing;
    });
    return classes;
}

NPoly class_weighted_sum(const DegreeProfile& profile, int budget_half_edges) {
    NPoly out;
    for (const auto& cls : enumerate_classes(profile, false, budget_half_edges))
        out.add_term(cls.boundary, Rational(1, BigInt(cls.aut)));
    return out;
}

Rational connected_sum_gs(int g, int s, int budget_half_edges, bool parallel) {
    if (g < 0 || s < 1 || 2 - 2 * g - s >= 0)
        throw std::invalid_argument("connected_sum_gs: need g >= 0, s >= 1, 2-2g-s < 0");
    const int d = 2 * g + s - 2;  // edges minus vertices
    Rational total = 0;
    for (const auto& profile : DegreeProfile::all_with_excess(d)) {
        const int dots = profile.half_edges();
        if (dots % 2 != 0) continue;
        if (dots > budget_half_edges)
            throw BudgetExceeded("connected_sum_gs: profile " + profile.str() + " needs " +
                                 std::to_string(dots) + " half-edges (budget " +
                                 std::to_string(budget_half_edges) + ")");
        const ScanStats stats =
            parallel ? scan_profile_parallel(profile) : scan_profile_serial(profile);
        const std::uint64_t hits = stats.connected_at(s);
        if (hits == 0) continue;
        const int e = dots / 2;
        Rational term(BigInt(hits), BigInt(profile.cyclic_group_order()));
        total += (e % 2 == 0) ? term : -term;
    }
    return total;
}

WeightedSeries<NPoly> connected_matrix_expansion(int trunc) {
    if (trunc < 0) throw std::invalid_argument("connected_matrix_expansion: negative trunc");
    const int max_degree = std::max(3, trunc);
    auto vars = wick::t_variables(3, max_degree);
    WeightedSeries<NPoly> out(vars, trunc);
    for (const auto& profile : DegreeProfile::all_up_to_weight(3, max_degree, trunc)) {
        if (profile.counts().empty() || !profile.even()) continue;
        const ScanStats stats = scan_profile_serial(profile);
        NPoly coeff;
        for (int b = 0; b < static_cast<int>(stats.connected.size()); ++b)
            if (stats.connected[b])
                coeff.add_term(b, Rational(BigInt(stats.connected[b]),
                                           BigInt(profile.cyclic_group_order())));
        if (coeff.is_zero()) continue;
        Mono m(vars->size(), 0);
        for (const auto& [j, v] : profile.counts()) m[j - 3] = v;
        out.add_term(std::move(m), coeff);
    }
    return out;
}

nlohmann::ordered_json to_json(const RibbonGraph& g) {
    validate(g);
    auto cycles = rotation_cycles(g.rotation);
    for (auto& c : cycles) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    nlohmann::ordered_json j;
    j["rotation"] = cycles;
    auto pairs = nlohmann::ordered_json::array();
    for (int h = 0; h < g.half_edges(); ++h)
        if (h < g.pairing[h]) pairs.push_back({h, g.pairing[h]});
    j["pairing"] = std::move(pairs);
    return j;
}

RibbonGraph ribbon_from_json(const nlohmann::json& j) {
    RibbonGraph g;
    int n = 0;
    for (const auto& cyc : j.at("rotation")) n += static_cast<int>(cyc.size());
    g.rotation.assign(n, -1);
    g.pairing.assign(n, -1);
    for (const auto& cyc : j.at("rotation")) {
        const auto len = cyc.size();
        for (std::size_t i = 0; i < len; ++i) {
            const int h = cyc[i].get<int>();
            if (h < 0 || h >= n) throw std::invalid_argument("ribbon_from_json: bad half-edge id");
            g.rotation[h] = cyc[(i + 1) % len].get<int>();
        }
    }
    for (const auto& pr : j.at("pairing")) {
        const int a = pr.at(0).get<int>();
        const int b = pr.at(1).get<int>();
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("ribbon_from_json: bad pairing ids");
        g.pairing[a] = b;
        g.pairing[b] = a;
    }
    validate(g);
    return g;
}

}  // namespace matint::ribbon
