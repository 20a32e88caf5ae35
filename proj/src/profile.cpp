#include <matint/profile.hpp>

#include <sstream>
#include <stdexcept>

namespace matint {

DegreeProfile::DegreeProfile(std::map<int, int> counts) : counts_(std::move(counts)) {
    for (auto it = counts_.begin(); it != counts_.end();) {
        if (it->first < 1) throw std::invalid_argument("DegreeProfile: degree must be >= 1");
        if (it->second < 0) throw std::invalid_argument("DegreeProfile: negative vertex count");
        if (it->second == 0)
            it = counts_.erase(it);
        else
            ++it;
    }
}

int DegreeProfile::half_edges() const {
    int n = 0;
    for (const auto& [j, v] : counts_) n += j * v;
    return n;
}

int DegreeProfile::vertices() const {
    int n = 0;
    for (const auto& [j, v] : counts_) n += v;
    return n;
}

std::uint64_t DegreeProfile::cyclic_group_order() const {
    std::uint64_t g = 1;
    auto mul = [&g](std::uint64_t f) {
        if (f != 0 && g > UINT64_MAX / f)
            throw std::overflow_error("DegreeProfile: group order overflow");
        g *= f;
    };
    for (const auto& [j, v] : counts_) {
        for (int i = 0; i < v; ++i) mul(static_cast<std::uint64_t>(j));
        for (int i = 2; i <= v; ++i) mul(static_cast<std::uint64_t>(i));
    }
    return g;
}

BigInt DegreeProfile::symmetric_group_order() const {
    BigInt g = 1;
    for (const auto& [j, v] : counts_) {
        BigInt jf = factorial_big(static_cast<unsigned>(j));
        for (int i = 0; i < v; ++i) g *= jf;
        g *= factorial_big(static_cast<unsigned>(v));
    }
    return g;
}

std::string DegreeProfile::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, v] : counts_) {
        if (!first) os << ',';
        os << j << ':' << v;
        first = false;
    }
    return os.str();
}

DegreeProfile DegreeProfile::parse(const std::string& s) {
    std::map<int, int> counts;
    if (s.empty()) return DegreeProfile{};
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("DegreeProfile: expected 'degree:count' in '" + s + "'");
        int j = 0, v = 0;
        try {
            j = std::stoi(item.substr(0, colon));
            v = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("DegreeProfile: malformed entry '" + item + "'");
        }
        if (j < 1 || v < 0) throw std::invalid_argument("DegreeProfile: bad entry '" + item + "'");
        counts[j] += v;
    }
    return DegreeProfile(counts);
}

std::vector<DegreeProfile> DegreeProfile::all_up_to_weight(int min_degree, int max_degree,
                                                           int max_weight) {
    std::vector<DegreeProfile> out;
    std::map<int, int> cur;
    // profiles ordered by their map representation; recursion over degrees
    auto rec = [&](auto&& self, int degree, int weight_left) -> void {
        if (degree > max_degree) {
            out.emplace_back(cur);
            return;
        }
        self(self, degree + 1, weight_left);
        for (int v = 1; v * degree <= weight_left; ++v) {
            cur[degree] = v;
            self(self, degree + 1, weight_left - v * degree);
        }
        cur.erase(degree);
    };
    rec(rec, min_degree, max_weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DegreeProfile> DegreeProfile::all_with_excess(int d) {
    if (d < 1) throw std::invalid_argument("all_with_excess: need e - v >= 1");
    std::vector<DegreeProfile> out;
    std::map<int, int> cur;
    auto rec = [&](auto&& self, int degree, int excess_left) -> void {
        if (excess_left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (degree - 2 > excess_left) return;
        self(self, degree + 1, excess_left);
        for (int v = 1; v * (degree - 2) <= excess_left; ++v) {
            cur[degree] = v;
            self(self, degree + 1, excess_left - v * (degree - 2));
        }
        cur.erase(degree);
    };
    rec(rec, 3, 2 * d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace matint
