#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <matint/profile.hpp>

namespace matint {

/// Fixed-point-free involution on labeled dots: partner[i] is the dot matched
/// with i. Together with the block structure of a DegreeProfile this is a
/// pairing scheme.
struct PairingScheme {
    std::vector<int> partner;
    int dots() const { return static_cast<int>(partner.size()); }
};

/// Number of perfect matchings of `dots` labeled dots: (dots-1)!!.
std::uint64_t matching_count(int dots);

/// The vertex rotation for a profile: blocks of consecutive half-edges, one
/// block of length j per degree-j vertex, degrees ascending; rotation maps
/// each half-edge to the next one around its vertex.
std::vector<int> standard_rotation(const DegreeProfile& profile);

namespace detail {

// Completes a partial pairing, visiting every completion exactly once.
// Order: the smallest unmatched dot is paired with each larger free dot in
// increasing order.
template <class F>
void complete_matchings(std::vector<int>& partner, int from, F&& visit) {
    const int n = static_cast<int>(partner.size());
    int a = from;
    while (a < n && partner[a] >= 0) ++a;
    if (a == n) {
        visit(const_cast<const std::vector<int>&>(partner));
        return;
    }
    for (int b = a + 1; b < n; ++b) {
        if (partner[b] >= 0) continue;
        partner[a] = b;
        partner[b] = a;
        complete_matchings(partner, a + 1, visit);
        partner[a] = -1;
        partner[b] = -1;
    }
}

}  // namespace detail

/// Enumerates all perfect matchings of `dots` labeled dots in deterministic
/// (smallest-unmatched-first) order. Throws on odd dot count.
template <class F>
void for_each_matching(int dots, F&& visit) {
    if (dots < 0 || dots % 2 != 0)
        throw std::invalid_argument("for_each_matching: odd dot count");
    if (dots == 0) {
        std::vector<int> empty;
        visit(const_cast<const std::vector<int>&>(empty));
        return;
    }
    std::vector<int> partner(dots, -1);
    detail::complete_matchings(partner, 0, visit);
}

/// Boundary statistics of every pairing scheme of a profile.
/// all[b] counts matchings whose ribbon graph has b boundary circuits;
/// connected[b] counts only those with connected underlying graph.
struct ScanStats {
    std::vector<std::uint64_t> all;
    std::vector<std::uint64_t> connected;
    std::uint64_t total = 0;

    std::uint64_t all_at(int b) const {
        return b >= 0 && b < static_cast<int>(all.size()) ? all[b] : 0;
    }
    std::uint64_t connected_at(int b) const {
        return b >= 0 && b < static_cast<int>(connected.size()) ? connected[b] : 0;
    }
    bool operator==(const ScanStats& o) const = default;
};

/// Reference implementation: single-threaded scan over all matchings.
ScanStats scan_profile_serial(const DegreeProfile& profile);

/// OpenMP scan partitioned by the first two pair choices; result is exact and
/// independent of the thread count.
ScanStats scan_profile_parallel(const DegreeProfile& profile);

/// Number of cycles of the boundary permutation (pairing after rotation).
int boundary_cycle_count(const std::vector<int>& rotation, const std::vector<int>& pairing);

/// Single orbit of the group generated by rotation and pairing?
bool pairing_connected(const std::vector<int>& rotation, const std::vector<int>& pairing);

}  // namespace matint
