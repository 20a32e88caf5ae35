#pragma once

#include <map>
#include <string>
#include <vector>

#include <matint/rational.hpp>

namespace matint {

/// Degree profile: how many vertices of each degree a graph has.
/// "Moduli mode" restricts to degrees >= 3.
class DegreeProfile {
public:
    DegreeProfile() = default;
    explicit DegreeProfile(std::map<int, int> counts);

    const std::map<int, int>& counts() const { return counts_; }
    int count(int degree) const {
        auto it = counts_.find(degree);
        return it == counts_.end() ? 0 : it->second;
    }

    int half_edges() const;  // sum j * v_j
    int vertices() const;
    bool even() const { return half_edges() % 2 == 0; }
    int edges() const { return half_edges() / 2; }
    int min_degree() const { return counts_.empty() ? 0 : counts_.begin()->first; }

    /// Order of prod_j S_{v_j} x (Z/jZ)^{v_j}: prod j^{v_j} v_j!.
    std::uint64_t cyclic_group_order() const;
    /// Order of prod_j S_{v_j} x (S_j)^{v_j}: prod (j!)^{v_j} v_j!.
    BigInt symmetric_group_order() const;

    bool operator==(const DegreeProfile& o) const = default;
    bool operator<(const DegreeProfile& o) const { return counts_ < o.counts_; }

    std::string str() const;                        // "3:2,4:1"
    static DegreeProfile parse(const std::string&); // inverse of str()

    /// All profiles with degrees in [min_degree, max_degree] and
    /// weighted degree sum j*v_j <= max_weight, in deterministic order.
    static std::vector<DegreeProfile> all_up_to_weight(int min_degree, int max_degree,
                                                       int max_weight);

    /// All profiles with degrees >= 3 and sum (j-2)*v_j = 2d, i.e. all
    /// profiles of connected graphs with e - v = d. Max degree 2d + 2.
    static std::vector<DegreeProfile> all_with_excess(int d);

private:
    std::map<int, int> counts_;
};

}  // namespace matint
