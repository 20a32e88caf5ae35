#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <matint/wick.hpp>

using namespace matint;

namespace {

NPoly npoly(std::initializer_list<std::pair<int, Rational>> terms) {
    NPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

DegreeProfile profile(const std::string& s) { return DegreeProfile::parse(s); }

}  // namespace

TEST_CASE("gaussian moments") {
    CHECK(wick::gaussian_moment(0) == 1);
    CHECK(wick::gaussian_moment(3) == 0);
    CHECK(wick::gaussian_moment(4) == 3);
    CHECK(wick::gaussian_moment(8) == 105);
    // brute force: the moment counts perfect matchings
    std::uint64_t count = 0;
    for_each_matching(8, [&](const std::vector<int>&) { ++count; });
    CHECK(Rational(BigInt(count)) == wick::gaussian_moment(8));
}

TEST_CASE("matching enumeration") {
    CHECK(wick::enumerate_matchings(profile("4:1"), [](const PairingScheme&) {}) == 3);
    CHECK_THROWS_AS(wick::enumerate_matchings(profile("3:1"), [](const PairingScheme&) {}),
                    std::invalid_argument);
    CHECK(wick::enumerate_matchings(profile("3:2"), [](const PairingScheme&) {}) == 15);
}

TEST_CASE("matchings are distinct involutions") {
    for (const char* ps : {"3:2", "4:2", "3:2,4:1", "3:4"}) {
        const auto prof = profile(ps);
        std::set<std::vector<int>> seen;
        const std::uint64_t n = wick::enumerate_matchings(prof, [&](const PairingScheme& m) {
            CHECK(seen.insert(m.partner).second);
            for (int i = 0; i < m.dots(); ++i) {
                CHECK(m.partner[i] != i);
                CHECK(m.partner[m.partner[i]] == i);
            }
        });
        CHECK(n == matching_count(prof.half_edges()));
        CHECK(seen.size() == n);
    }
}

TEST_CASE("scalar coefficients") {
    CHECK(wick::scalar_coefficient(profile("4:1")) == Rational(1, 8));
    CHECK(wick::scalar_coefficient(DegreeProfile{}) == 1);
    CHECK(wick::scalar_coefficient(profile("4:2")) == Rational(35, 384));
    CHECK(wick::scalar_coefficient(profile("3:2")) == Rational(5, 24));
    CHECK(wick::scalar_coefficient(profile("3:1")) == 0);

    // the normalized coefficient counts matchings
    for (const char* ps : {"4:1", "3:2", "4:2", "3:2,4:1"}) {
        const auto prof = profile(ps);
        const Rational unweighted =
            wick::scalar_coefficient(prof) * Rational(prof.symmetric_group_order());
        CHECK(denominator(unweighted) == 1);
        CHECK(unweighted >= 0);
    }
}

TEST_CASE("scalar expansion") {
    CHECK(wick::scalar_expansion(4, 0) ==
          WeightedSeries<Rational>::constant(wick::t_variables(1, 4), 0, Rational(1)));
    const auto s = wick::scalar_expansion(4, 8);
    CHECK(s.coefficient({0, 0, 0, 1}) == Rational(1, 8));   // t4
    CHECK(s.coefficient({0, 0, 2, 0}) == Rational(5, 24));  // t3^2
}

TEST_CASE("connected scalar expansion") {
    CHECK(wick::connected_scalar_expansion(4, 0).is_zero());
    const auto c = wick::connected_scalar_expansion(4, 8);
    CHECK(c.coefficient({0, 0, 0, 1}) == Rational(1, 8));
    // one lone degree-3 vertex has no matching, so nothing disconnected
    // contributes to t3^2 and the connected coefficient is the full one
    CHECK(c.coefficient({0, 0, 2, 0}) == Rational(5, 24));
    CHECK(series_exp(c) == wick::scalar_expansion(4, 8));
}

TEST_CASE("matrix pairing sums") {
    CHECK(wick::matrix_bruteforce_sum(profile("4:1")) ==
          npoly({{3, Rational(1, 2)}, {1, Rational(1, 4)}}));
    CHECK(wick::matrix_bruteforce_sum(DegreeProfile{}) == NPoly(1));
    CHECK(wick::matrix_bruteforce_sum(profile("3:2")) ==
          npoly({{3, Rational(2, 3)}, {1, Rational(1, 6)}}));
    CHECK(wick::matrix_bruteforce_sum(profile("4:2")) ==
          npoly({{6, Rational(1, 8)}, {4, Rational(5, 4)}, {2, Rational(61, 32)}}));
    CHECK(wick::matrix_bruteforce_sum(profile("6:1")) ==
          npoly({{4, Rational(5, 6)}, {2, Rational(5, 3)}}));
    CHECK_THROWS_AS(wick::matrix_bruteforce_sum(profile("3:1")), std::invalid_argument);
}

TEST_CASE("matrix sums at n = 1 reduce to cyclic-normalized counting") {
    for (const char* ps : {"4:1", "3:2", "4:2", "6:1", "3:2,4:1"}) {
        const auto prof = profile(ps);
        const Rational expected(BigInt(matching_count(prof.half_edges())),
                                BigInt(prof.cyclic_group_order()));
        CHECK(wick::matrix_bruteforce_sum(prof).eval(Rational(1)) == expected);
    }
    CHECK(wick::matrix_bruteforce_sum(profile("4:1")).eval(Rational(1)) == Rational(3, 4));
}

TEST_CASE("matrix sums respect the loop-count bound") {
    for (const char* ps : {"4:1", "3:2", "4:2", "6:1", "3:4"}) {
        const auto prof = profile(ps);
        CHECK(wick::matrix_bruteforce_sum(prof).degree() <= prof.edges() + prof.vertices());
    }
}

TEST_CASE("matrix expansion") {
    CHECK(wick::matrix_expansion(4, 0) ==
          WeightedSeries<NPoly>::constant(wick::t_variables(3, 4), 0, NPoly(1)));
    const auto s = wick::matrix_expansion(4, 8);
    CHECK(s.coefficient({0, 1}) == npoly({{3, Rational(1, 2)}, {1, Rational(1, 4)}}));
    CHECK(s.coefficient({2, 0}) == npoly({{3, Rational(2, 3)}, {1, Rational(1, 6)}}));
}
