#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <matint/kp.hpp>

using namespace matint;

namespace {

using Series = WeightedSeries<Rational>;

// exp(sum_alpha T_alpha lambda^alpha) as a T-series, via the series engine
Series exponential_of_times(const Rational& lambda, int num_vars, int trunc) {
    auto vars = kp::T_variables(num_vars);
    Series eta(vars, trunc);
    Rational pw = 1;
    for (int a = 1; a <= num_vars; ++a) {
        pw *= lambda;
        Mono m(num_vars, 0);
        m[a - 1] = 1;
        eta.add_term(std::move(m), pw);
    }
    return series_exp(eta);
}

}  // namespace

TEST_CASE("schur polynomial basics") {
    const auto p0 = kp::schur_p(0, 3, 6);
    CHECK(p0.constant_term() == 1);
    CHECK(p0.terms().size() == 1);
    CHECK(kp::schur_p(-2, 3, 6).is_zero());

    const auto p2 = kp::schur_p(2, 3, 6);
    CHECK(p2.coefficient({0, 1, 0}) == 1);
    CHECK(p2.coefficient({2, 0, 0}) == Rational(1, 2));
    CHECK(p2.terms().size() == 2);

    const auto p3 = kp::schur_p(3, 3, 6);
    CHECK(p3.coefficient({0, 0, 1}) == 1);
    CHECK(p3.coefficient({1, 1, 0}) == 1);
    CHECK(p3.coefficient({3, 0, 0}) == Rational(1, 6));
    CHECK(p3.terms().size() == 3);
}

TEST_CASE("schur polynomials assemble the exponential") {
    // sum_r p_r(T) k^r = exp(sum_alpha T_alpha k^alpha), checked as T-series
    // for several rational k (independent route: series exp vs enumeration)
    const int nv = 5, trunc = 5;
    for (const Rational& k : {Rational(1), Rational(2), Rational(-1, 2)}) {
        Series lhs(kp::T_variables(nv), trunc);
        Rational kr = 1;
        for (int r = 0; r <= trunc; ++r) {
            lhs = series_add(lhs, series_scale(kp::schur_p(r, nv, trunc), kr));
            kr *= k;
        }
        CHECK(lhs == exponential_of_times(k, nv, trunc));
    }
}

TEST_CASE("tau determinant basics") {
    // n = 1, xi_r = delta_{r0}
    kp::MomentMatrix unit;
    unit.n = 1;
    unit.rows = 7;
    unit.xi.assign(7, {Rational(0)});
    unit.xi[0][0] = 1;
    const auto tau = kp::tau_det(unit, 6);
    CHECK(tau == Series::constant(kp::T_variables(6), 6, Rational(1)));

    // n = 1, xi_r = lambda^r gives the pure exponential
    const Rational lambda(3, 2);
    kp::MomentMatrix geo;
    geo.n = 1;
    geo.rows = 7;
    Rational pw = 1;
    for (int r = 0; r < 7; ++r) {
        geo.xi.push_back({pw});
        pw *= lambda;
    }
    CHECK(kp::tau_det(geo, 6) == exponential_of_times(lambda, 6, 6));
}

TEST_CASE("gaussian moment matrices") {
    const auto m1 = kp::gaussian_moment_matrix(1, 8);
    CHECK(m1.at(0, 0) == 1);
    CHECK(m1.at(1, 0) == 0);
    CHECK(m1.at(4, 0) == 3);
    CHECK(m1.at(6, 0) == 15);

    CHECK(kp::top_minor_det(kp::gaussian_moment_matrix(2, 4)) == 1);
    CHECK(kp::top_minor_det(kp::gaussian_moment_matrix(3, 5)) == 2);

    const auto tau2 = kp::tau_det(kp::gaussian_moment_matrix(2, 8), 6);
    CHECK(tau2.constant_term() == 1);
}

TEST_CASE("tau determinant rejects bad inputs") {
    kp::MomentMatrix ones;
    ones.n = 2;
    ones.rows = 10;
    ones.xi.assign(10, {Rational(1), Rational(1)});
    CHECK_THROWS_AS(kp::tau_det(ones, 4), std::invalid_argument);  // singular top minor

    CHECK_THROWS_AS(kp::tau_det(kp::gaussian_moment_matrix(2, 4), 6),
                    std::invalid_argument);  // too few rows
}

TEST_CASE("u from tau") {
    auto vars = kp::T_variables(6);
    CHECK(kp::u_from_tau(Series::constant(vars, 6, Rational(5))).is_zero());
    // log of a pure exponential is linear, so u vanishes
    CHECK(kp::u_from_tau(exponential_of_times(Rational(2), 6, 6)).is_zero());
    CHECK_THROWS_AS(kp::u_from_tau(Series(vars, 6)), std::invalid_argument);
}

TEST_CASE("KP residual") {
    auto vars = kp::T_variables(4);
    CHECK(kp::kp_residual(Series(vars, 8)).is_zero());

    // u = T1 is not a second log-derivative of any tau: residual is 3
    Series t1 = Series::variable(vars, 8, 0);
    const auto r = kp::kp_residual(t1);
    CHECK_FALSE(r.is_zero());
    CHECK(r.constant_term() == 3);

    for (int n : {1, 2}) {
        const auto tau = kp::tau_det(kp::gaussian_moment_matrix(n, n + 10), 10);
        CHECK(kp::kp_residual(kp::u_from_tau(tau)).is_zero());
    }
    const auto tau_r = kp::tau_det(kp::random_moment_matrix(2, 12, 99), 10);
    CHECK(kp::kp_residual(kp::u_from_tau(tau_r)).is_zero());
}

TEST_CASE("random moment matrices are seeded and nonsingular") {
    const auto a = kp::random_moment_matrix(3, 10, 42);
    const auto b = kp::random_moment_matrix(3, 10, 42);
    CHECK(a.xi == b.xi);
    CHECK(kp::top_minor_det(a) != 0);
    const auto c = kp::random_moment_matrix(3, 10, 43);
    CHECK(a.xi != c.xi);
}

TEST_CASE("soliton tau with identity coefficients") {
    kp::SolitonData data;
    data.n = 2;
    data.lambda = {Rational(1), Rational(2)};
    data.c = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    const auto tau = kp::soliton_tau(data, 5);
    // single subset: Vandermonde (2-1) times exp(eta(T,1) + eta(T,2))
    Series expected =
        series_mul(exponential_of_times(Rational(1), 5, 5), exponential_of_times(Rational(2), 5, 5));
    CHECK(tau == expected);
}

TEST_CASE("soliton tau is proportional to the moment determinant") {
    const auto data = kp::random_soliton_data(2, 3, 2024);
    const auto direct = kp::soliton_tau(data, 6);
    const auto viamoments = kp::tau_det(kp::soliton_moment_matrix(data, 2 + 6), 6);
    CHECK(kp::series_proportional(direct, viamoments));
    CHECK(kp::series_proportional(viamoments, direct));
}

TEST_CASE("soliton data validation") {
    kp::SolitonData bad;
    bad.n = 2;
    bad.lambda = {Rational(1), Rational(1), Rational(2)};
    bad.c.assign(3, {Rational(1), Rational(1)});
    CHECK_THROWS_AS(kp::validate(bad), std::invalid_argument);
}

TEST_CASE("large determinants go through elimination and agree at the origin") {
    // n = 5 leaves the cofactor fast path; the constant term of tau must
    // still be the top-minor determinant
    const auto m = kp::random_moment_matrix(5, 5 + 8, 321);
    const auto tau = kp::tau_det(m, 8);
    CHECK(tau.constant_term() == kp::top_minor_det(m));
    CHECK(kp::kp_residual(kp::u_from_tau(tau)).is_zero());
}

TEST_CASE("tau is alternating in the moment columns") {
    auto m = kp::random_moment_matrix(2, 10, 7);
    const auto tau = kp::tau_det(m, 4);
    auto swapped = m;
    for (auto& row : swapped.xi) std::swap(row[0], row[1]);
    CHECK(kp::tau_det(swapped, 4) == series_neg(tau));

    // adding a multiple of one column to another leaves tau unchanged
    auto sheared = m;
    for (auto& row : sheared.xi) row[1] += Rational(3, 5) * row[0];
    CHECK(kp::tau_det(sheared, 4) == tau);
}
