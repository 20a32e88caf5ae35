#include <matint/matching.hpp>

#include <omp.h>

#include <stdexcept>

namespace matint {

std::uint64_t matching_count(int dots) {
    if (dots < 0 || dots % 2 != 0)
        throw std::invalid_argument("matching_count: odd dot count");
    std::uint64_t c = 1;
    for (int m = dots - 1; m >= 3; m -= 2) c *= static_cast<std::uint64_t>(m);
    return c;
}

std::vector<int> standard_rotation(const DegreeProfile& profile) {
    std::vector<int> rot(profile.half_edges());
    int d = 0;
    for (const auto& [j, v] : profile.counts()) {
        for (int i = 0; i < v; ++i) {
            for (int r = 0; r < j; ++r) rot[d + r] = d + (r + 1) % j;
            d += j;
        }
    }
    return rot;
}

int boundary_cycle_count(const std::vector<int>& rotation, const std::vector<int>& pairing) {
    const int n = static_cast<int>(rotation.size());
    std::uint64_t seen = 0;
    int cycles = 0;
    for (int h = 0; h < n; ++h) {
        if (seen >> h & 1) continue;
        ++cycles;
        int x = h;
        do {
            seen |= std::uint64_t{1} << x;
            x = pairing[rotation[x]];
        } while (x != h);
    }
    return cycles;
}

bool pairing_connected(const std::vector<int>& rotation, const std::vector<int>& pairing) {
    const int n = static_cast<int>(rotation.size());
    if (n == 0) return true;
    std::uint64_t seen = 1;
    int stack[64];
    int top = 0;
    stack[top++] = 0;
    int visited = 1;
    while (top > 0) {
        const int x = stack[--top];
        for (int y : {rotation[x], pairing[x]}) {
            if (!(seen >> y & 1)) {
                seen |= std::uint64_t{1} << y;
                ++visited;
                stack[top++] = y;
            }
        }
    }
    return visited == n;
}

namespace {

struct ScanAccum {
    std::vector<std::uint64_t> all;
    std::vector<std::uint64_t> connected;
    std::uint64_t total = 0;

    explicit ScanAccum(int max_b) : all(max_b + 1, 0), connected(max_b + 1, 0) {}

    void merge(const ScanAccum& o) {
        for (std::size_t i = 0; i < all.size(); ++i) {
            all[i] += o.all[i];
            connected[i] += o.connected[i];
        }
        total += o.total;
    }
};

void tally(const std::vector<int>& rotation, const std::vector<int>& pairing, ScanAccum& acc) {
    const int b = boundary_cycle_count(rotation, pairing);
    acc.all[b] += 1;
    if (pairing_connected(rotation, pairing)) acc.connected[b] += 1;
    acc.total += 1;
}

ScanStats finish(ScanAccum&& acc) {
    ScanStats s;
    s.all = std::move(acc.all);
    s.connected = std::move(acc.connected);
    s.total = acc.total;
    return s;
}

}  // namespace

ScanStats scan_profile_serial(const DegreeProfile& profile) {
    const int dots = profile.half_edges();
    if (dots > 62) throw std::invalid_argument("scan_profile: too many half-edges");
    const std::vector<int> rot = standard_rotation(profile);
    ScanAccum acc(std::max(1, dots));
    if (dots == 0) {
        acc.all[0] = 1;  // empty graph: one matching, zero circuits
        acc.connected[0] = 1;
        acc.total = 1;
        return finish(std::move(acc));
    }
    if (dots % 2 != 0) return finish(std::move(acc));  // no matchings at all
    for_each_matching(dots, [&](const std::vector<int>& pairing) { tally(rot, pairing, acc); });
    return finish(std::move(acc));
}

ScanStats scan_profile_parallel(const DegreeProfile& profile) {
    const int dots = profile.half_edges();
    if (dots > 62) throw std::invalid_argument("scan_profile: too many half-edges");
    if (dots < 8 || dots % 2 != 0) return scan_profile_serial(profile);
    const std::vector<int> rot = standard_rotation(profile);

    // Split by the partners of the first two matched dots; each task is an
    // independent sub-enumeration, so the reduction is a plain sum.
    struct Task {
        int b0, a1, b1;
    };
    std::vector<Task> tasks;
    for (int b0 = 1; b0 < dots; ++b0) {
        const int a1 = (b0 == 1) ? 2 : 1;
        for (int b1 = a1 + 1; b1 < dots; ++b1) {
            if (b1 == b0) continue;
            tasks.push_back({b0, a1, b1});
        }
    }

    std::vector<ScanAccum> partial(tasks.size(), ScanAccum(std::max(1, dots)));
#pragma omp parallel for schedule(dynamic)
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        std::vector<int> partner(dots, -1);
        partner[0] = tasks[t].b0;
        partner[tasks[t].b0] = 0;
        partner[tasks[t].a1] = tasks[t].b1;
        partner[tasks[t].b1] = tasks[t].a1;
        detail::complete_matchings(partner, tasks[t].a1 + 1, [&](const std::vector<int>& pairing) {
            tally(rot, pairing, partial[t]);
        });
    }

    ScanAccum acc(std::max(1, dots));
    for (const auto& p : partial) acc.merge(p);
    return finish(std::move(acc));
}

}  // namespace matint
