#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <matint/series.hpp>

using namespace matint;

namespace {

using RSeries = WeightedSeries<Rational>;

std::shared_ptr<const VariableSpec> t34() { return VariableSpec::make({"t3", "t4"}, {3, 4}); }

RSeries constant(std::shared_ptr<const VariableSpec> vs, int trunc, long c) {
    return RSeries::constant(std::move(vs), trunc, Rational(c));
}

// deterministic sparse random series with zero constant term
RSeries random_series(std::mt19937_64& eng, std::shared_ptr<const VariableSpec> vs, int trunc) {
    RSeries s(vs, trunc);
    const int nv = static_cast<int>(vs->size());
    for (int tries = 0; tries < 12; ++tries) {
        Mono m(nv, 0);
        for (int i = 0; i < nv; ++i) m[i] = static_cast<int>(eng() % 3);
        if (weighted_degree(m, *vs) == 0 || weighted_degree(m, *vs) > trunc) continue;
        const long num = static_cast<long>(eng() % 11) - 5;
        const long den = static_cast<long>(eng() % 4) + 1;
        s.add_term(m, Rational(num, den));
    }
    return s;
}

}  // namespace

TEST_CASE("addition basics") {
    auto vs = t34();
    RSeries s(vs, 8);
    s.add_term({1, 0}, Rational(2));
    s.add_term({0, 1}, Rational(-1, 3));

    CHECK(series_add(RSeries(vs, 8), s) == s);  // 0 + s = s

    RSeries onept3 = constant(vs, 8, 1);
    onept3.add_term({1, 0}, Rational(1));
    RSeries onemt3 = constant(vs, 8, 1);
    onemt3.add_term({1, 0}, Rational(-1));
    CHECK(series_add(onept3, onemt3) == constant(vs, 8, 2));

    RSeries t3 = RSeries::variable(vs, 8, 0);
    RSeries t4 = RSeries::variable(vs, 8, 1);
    RSeries sum = series_add(t3, t4);
    CHECK(sum.coefficient({1, 0}) == 1);
    CHECK(sum.coefficient({0, 1}) == 1);
    CHECK(sum.terms().size() == 2);
}

TEST_CASE("mismatched variable specs are rejected") {
    auto a = RSeries(t34(), 8);
    auto b = RSeries(VariableSpec::make({"t3"}, {3}), 8);
    CHECK_THROWS_AS(series_add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(series_mul(a, b), std::invalid_argument);
}

TEST_CASE("multiplication basics") {
    auto vs = t34();
    RSeries s(vs, 8);
    s.add_term({1, 1}, Rational(5, 7));
    CHECK(series_mul(constant(vs, 8, 1), s) == s);

    RSeries onept3 = constant(vs, 6, 1);
    onept3.add_term({1, 0}, Rational(1));
    RSeries onemt3 = constant(vs, 6, 1);
    onemt3.add_term({1, 0}, Rational(-1));
    RSeries prod = series_mul(onept3, onemt3);
    CHECK(prod.coefficient({0, 0}) == 1);
    CHECK(prod.coefficient({2, 0}) == -1);
    CHECK(prod.terms().size() == 2);

    // weight 8 > trunc 6 is dropped
    RSeries t4 = RSeries::variable(vs, 6, 1);
    CHECK(series_mul(t4, t4).is_zero());
}

TEST_CASE("exp basics") {
    auto vs = t34();
    CHECK(series_exp(RSeries(vs, 8)) == constant(vs, 8, 1));

    RSeries t3 = RSeries::variable(vs, 6, 0);
    RSeries e = series_exp(t3);
    CHECK(e.coefficient({0, 0}) == 1);
    CHECK(e.coefficient({1, 0}) == 1);
    CHECK(e.coefficient({2, 0}) == Rational(1, 2));
    CHECK(e.terms().size() == 3);

    RSeries x = constant(vs, 9, 1);
    x.add_term({1, 0}, Rational(1));
    x.add_term({0, 1}, Rational(1));
    CHECK(series_exp(series_log(x)) == x);

    CHECK_THROWS_AS(series_exp(constant(vs, 8, 1)), std::invalid_argument);
}

TEST_CASE("log basics") {
    auto vs = t34();
    CHECK(series_log(constant(vs, 8, 1)).is_zero());

    RSeries t3pt4(vs, 9);
    t3pt4.add_term({1, 0}, Rational(1));
    t3pt4.add_term({0, 1}, Rational(1));
    CHECK(series_log(series_exp(t3pt4)) == t3pt4);

    RSeries onemt3 = constant(vs, 6, 1);
    onemt3.add_term({1, 0}, Rational(-1));
    RSeries l = series_log(onemt3);
    CHECK(l.coefficient({1, 0}) == -1);
    CHECK(l.coefficient({2, 0}) == Rational(-1, 2));
    CHECK(l.terms().size() == 2);

    CHECK_THROWS_AS(series_log(RSeries(vs, 8)), std::invalid_argument);
}

TEST_CASE("derivatives") {
    auto vs = VariableSpec::make({"T1", "T2"}, {1, 2});
    RSeries half_t1_sq(vs, 6);
    half_t1_sq.add_term({2, 0}, Rational(1, 2));
    RSeries d = series_derive(half_t1_sq, "T1");
    CHECK(d.coefficient({1, 0}) == 1);
    CHECK(d.terms().size() == 1);
    CHECK(d.trunc() == 5);

    CHECK(series_derive(constant(vs, 6, 42), "T2").is_zero());

    RSeries t1t2(vs, 6);
    t1t2.add_term({1, 1}, Rational(1));
    RSeries d2 = series_derive(t1t2, "T1");
    CHECK(d2.coefficient({0, 1}) == 1);
    CHECK(d2.terms().size() == 1);

    CHECK_THROWS_AS(series_derive(half_t1_sq, "T9"), std::invalid_argument);
}

TEST_CASE("penner substitution examples") {
    auto vs = t34();
    RSeries t3sq(vs, 8);
    t3sq.add_term({2, 0}, Rational(1));
    RSeries z1 = penner_substitute(t3sq, 4);
    CHECK(z1.coefficient({1}) == 1);  // t3^2 -> z
    CHECK(z1.terms().size() == 1);

    RSeries t4 = RSeries::variable(vs, 8, 1);
    RSeries z2 = penner_substitute(t4, 4);
    CHECK(z2.coefficient({1}) == -1);  // t4 -> -z

    CHECK(penner_substitute(constant(vs, 8, 1), 4) == RSeries::constant(
              VariableSpec::make({"z"}, {1}), 4, Rational(1)));

    auto bad = VariableSpec::make({"t2"}, {2});
    CHECK_THROWS_AS(penner_substitute(RSeries(bad, 4), 2), std::invalid_argument);
}

TEST_CASE("ring axioms on random truncated series") {
    auto vs = VariableSpec::make({"t3", "t4", "t5"}, {3, 4, 5});
    std::mt19937_64 eng(12345);
    for (int rep = 0; rep < 20; ++rep) {
        RSeries a = random_series(eng, vs, 10);
        RSeries b = random_series(eng, vs, 10);
        RSeries c = random_series(eng, vs, 10);
        CHECK(series_add(a, b) == series_add(b, a));
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, series_add(b, c)) ==
              series_add(series_mul(a, b), series_mul(a, c)));
    }
}

TEST_CASE("exp and log are inverse on their domains") {
    auto vs = VariableSpec::make({"t3", "t4", "t5"}, {3, 4, 5});
    std::mt19937_64 eng(777);
    for (int rep = 0; rep < 10; ++rep) {
        RSeries a = random_series(eng, vs, 10);
        CHECK(series_log(series_exp(a)) == a);
        RSeries one_plus = series_add(constant(vs, 10, 1), a);
        CHECK(series_exp(series_log(one_plus)) == one_plus);
    }
}

TEST_CASE("multiplication is degree-compatible across truncation levels") {
    auto vs = VariableSpec::make({"t3", "t4", "t5"}, {3, 4, 5});
    std::mt19937_64 eng(999);
    for (int rep = 0; rep < 10; ++rep) {
        RSeries a = random_series(eng, vs, 10);
        RSeries b = random_series(eng, vs, 10);
        // coefficients up to weight 7 must not depend on terms above weight 7
        RSeries full = truncate_to(series_mul(a, b), 7);
        RSeries cut = series_mul(truncate_to(a, 7), truncate_to(b, 7));
        CHECK(full == cut);
    }
}

TEST_CASE("series JSON is deterministic and ordered") {
    auto vs = t34();
    RSeries s(vs, 8);
    s.add_term({0, 1}, Rational(-1, 3));
    s.add_term({1, 0}, Rational(2));
    const auto j = series_to_json(s);
    CHECK(j["vars"] == nlohmann::ordered_json({"t3", "t4"}));
    CHECK(j["weights"] == nlohmann::ordered_json({3, 4}));
    CHECK(j["trunc"] == 8);
    REQUIRE(j["terms"].size() == 2);
    // graded order: weight 3 before weight 4
    CHECK(j["terms"][0]["exp"] == nlohmann::ordered_json({1, 0}));
    CHECK(j["terms"][0]["coeff"] == "2");
    CHECK(j["terms"][1]["coeff"] == "-1/3");
    CHECK(series_to_json(s).dump() == j.dump());
}

TEST_CASE("npoly coefficient JSON") {
    NPoly p;
    p.add_term(3, Rational(1, 2));
    p.add_term(1, Rational(1, 4));
    const auto j = coeff_to_json(p);
    CHECK(j["n_poly"]["1"] == "1/4");
    CHECK(j["n_poly"]["3"] == "1/2");
    CHECK(p.str() == "n^3/2 + n/4");
}
