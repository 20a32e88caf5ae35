#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include <matint/matching.hpp>
#include <matint/npoly.hpp>
#include <matint/profile.hpp>
#include <matint/series.hpp>

namespace matint::ribbon {

/// Ribbon graph as a pair of permutations on half-edges 0..2E-1:
/// `rotation` maps each half-edge to the next one around its vertex (its
/// cycles are the vertices), `pairing` is the fixed-point-free involution
/// gluing half-edges into edges. The boundary permutation is
/// pairing after rotation.
struct RibbonGraph {
    std::vector<int> rotation;
    std::vector<int> pairing;

    int half_edges() const { return static_cast<int>(rotation.size()); }
    bool operator==(const RibbonGraph& o) const = default;
};

/// Checks the permutation/involution invariants; throws on violation.
void validate(const RibbonGraph& g);

RibbonGraph from_profile_and_pairing(const DegreeProfile& profile, const PairingScheme& scheme);

DegreeProfile profile_of(const RibbonGraph& g);

/// Number of boundary circuits: cycles of pairing(rotation(.)).
int boundary_components(const RibbonGraph& g);

bool is_connected(const RibbonGraph& g);

/// (genus, boundary circuits) of the closed oriented surface the graph
/// thickens to; requires a connected, non-empty graph.
std::pair<int, int> genus(const RibbonGraph& g);

/// Order of the isotropy subgroup of prod_j S_{v_j} x (Z/jZ)^{v_j} fixing the
/// pairing scheme: vertex rotations and swaps of same-degree vertices only.
/// Direct iteration while the acting group is at most `direct_iteration_cap`
/// elements, pruned stabilizer search beyond.
std::uint64_t aut_order(const RibbonGraph& g,
                        std::uint64_t direct_iteration_cap = 10'000'000);

/// Lexicographically minimal relabeling under the acting group; two graphs
/// are isomorphic iff their canonical forms are equal.
RibbonGraph canonical_form(const RibbonGraph& g);

struct RibbonClass {
    RibbonGraph canonical;
    std::uint64_t aut = 1;
    int boundary = 0;
    int genus = -1;  // -1 when disconnected
    int vertices = 0;
    int edges = 0;
    bool connected = false;

    int sign() const { return edges % 2 == 0 ? 1 : -1; }
};

/// One RibbonClass per isomorphism class of ribbon graphs with the given
/// profile (disconnected ones included unless connected_only). Deterministic
/// order. Enforces the half-edge budget.
std::vector<RibbonClass> enumerate_classes(const DegreeProfile& profile, bool connected_only,
                                           int budget_half_edges = 16);

/// sum over all classes of n^b / aut, as an exact polynomial in n.
/// This is the class-side counterpart of wick::matrix_bruteforce_sum.
NPoly class_weighted_sum(const DegreeProfile& profile, int budget_half_edges = 16);

/// sum of (-1)^e / aut over connected classes with the given genus and number
/// of boundary circuits, across all admissible profiles (max vertex degree
/// 4g + 2s - 2). Requires 2 - 2g - s < 0.
Rational connected_sum_gs(int g, int s, int budget_half_edges = 14, bool parallel = true);

/// Connected matrix-model expansion: sum over connected classes of
/// n^b / aut * prod t_j^{v_j}, truncated by weighted degree.
WeightedSeries<NPoly> connected_matrix_expansion(int trunc);

nlohmann::ordered_json to_json(const RibbonGraph& g);
RibbonGraph ribbon_from_json(const nlohmann::json& j);

}  // namespace matint::ribbon
