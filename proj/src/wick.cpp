#include <matint/wick.hpp>

#include <numeric>

namespace matint::wick {

Rational gaussian_moment(long r) {
    if (r < 0) throw std::invalid_argument("gaussian_moment: negative order");
    if (r % 2 != 0) return 0;
    return Rational(odd_double_factorial(r - 1));
}

std::uint64_t enumerate_matchings(const DegreeProfile& profile,
                                  const std::function<void(const PairingScheme&)>& visit) {
    const int dots = profile.half_edges();
    if (dots % 2 != 0) throw std::invalid_argument("enumerate_matchings: odd dot count");
    std::uint64_t count = 0;
    PairingScheme scheme;
    for_each_matching(dots, [&](const std::vector<int>& partner) {
        ++count;
        scheme.partner = partner;
        visit(scheme);
    });
    return count;
}

Rational scalar_coefficient(const DegreeProfile& profile) {
    if (!profile.even()) return 0;
    const BigInt matchings = odd_double_factorial(profile.half_edges() - 1);
    return Rational(matchings, profile.symmetric_group_order());
}

std::shared_ptr<const VariableSpec> t_variables(int min_degree, int max_degree) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int j = min_degree; j <= max_degree; ++j) {
        names.push_back("t" + std::to_string(j));
        weights.push_back(j);
    }
    return VariableSpec::make(std::move(names), std::move(weights));
}

namespace {

Mono profile_monomial(const DegreeProfile& profile, int min_degree, int max_degree) {
    Mono m(max_degree - min_degree + 1, 0);
    for (const auto& [j, v] : profile.counts()) m[j - min_degree] = v;
    return m;
}

// Free-index loops of one matching: half-edge h carries an ordered index pair
// (slot 2h, slot 2h+1); the trace identifies slot 2h+1 with slot 2*rot[h],
// and a matched pair (h, h') identifies (2h, 2h'+1) and (2h+1, 2h').
int index_loop_count(const std::vector<int>& rot, const std::vector<int>& partner) {
    const int slots = 2 * static_cast<int>(rot.size());
    int parent[128];
    for (int i = 0; i < slots; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[x] = y;
    };
    for (int h = 0; h < static_cast<int>(rot.size()); ++h) {
        unite(2 * h + 1, 2 * rot[h]);
        unite(2 * h, 2 * partner[h] + 1);
        unite(2 * h + 1, 2 * partner[h]);
    }
    int loops = 0;
    for (int i = 0; i < slots; ++i)
        if (find(i) == i) ++loops;
    return loops;
}

}  // namespace

NPoly matrix_bruteforce_sum(const DegreeProfile& profile) {
    const int dots = profile.half_edges();
    if (dots % 2 != 0) throw std::invalid_argument("matrix_bruteforce_sum: odd dot count");
    if (dots > 62) throw std::invalid_argument("matrix_bruteforce_sum: too many half-edges");
    const std::vector<int> rot = standard_rotation(profile);
    std::vector<std::uint64_t> loop_counts(dots + 2, 0);
    if (dots == 0) {
        return NPoly(1);
    }
    for_each_matching(dots, [&](const std::vector<int>& partner) {
        loop_counts[index_loop_count(rot, partner)] += 1;
    });
    const Rational norm(1, BigInt(profile.cyclic_group_order()));
    NPoly out;
    for (int b = 0; b < static_cast<int>(loop_counts.size()); ++b)
        if (loop_counts[b]) out.add_term(b, Rational(BigInt(loop_counts[b])) * norm);
    return out;
}

WeightedSeries<Rational> scalar_expansion(int max_degree, int trunc) {
    if (max_degree < 1) throw std::invalid_argument("scalar_expansion: max_degree must be >= 1");
    auto vars = t_variables(1, max_degree);
    WeightedSeries<Rational> out(vars, trunc);
    for (const auto& profile : DegreeProfile::all_up_to_weight(1, max_degree, trunc)) {
        const Rational c = scalar_coefficient(profile);
        if (c == 0) continue;
        out.add_term(profile_monomial(profile, 1, max_degree), c);
    }
    return out;
}

WeightedSeries<Rational> connected_scalar_expansion(int max_degree, int trunc) {
    return series_log(scalar_expansion(max_degree, trunc));
}

WeightedSeries<NPoly> matrix_expansion(int max_degree, int trunc) {
    if (max_degree < 3) throw std::invalid_argument("matrix_expansion: max_degree must be >= 3");
    auto vars = t_variables(3, max_degree);
    WeightedSeries<NPoly> out(vars, trunc);
    for (const auto& profile : DegreeProfile::all_up_to_weight(3, max_degree, trunc)) {
        if (!profile.even()) continue;
        NPoly c = matrix_bruteforce_sum(profile);
        if (c.is_zero()) continue;
        out.add_term(profile_monomial(profile, 3, max_degree), c);
    }
    return out;
}

}  // namespace matint::wick
