#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <matint/stabilizer.hpp>
#include <matint/wick.hpp>

using namespace matint;
using namespace matint::stab;

namespace {

PolyFrac sym(const MomentContext& ctx, int mu) { return ctx.a[mu - 1]; }

}  // namespace

TEST_CASE("moment reduction basics for k = 1") {
    const auto ctx = MomentContext::symbolic(1);
    // basis: M_0 only
    const auto m0 = reduce_moment(0, ctx);
    CHECK(m0[0] == ctx.constant(1));

    // M_1 = -a1/(2 a2) M_0
    const auto m1 = reduce_moment(1, ctx);
    CHECK(m1[0] == -(sym(ctx, 1) / (ctx.constant(2) * sym(ctx, 2))));

    // M_2 = -(M_0 + a1 M_1)/(2 a2)
    const auto m2 = reduce_moment(2, ctx);
    const PolyFrac expected =
        -((ctx.constant(1) + sym(ctx, 1) * m1[0]) / (ctx.constant(2) * sym(ctx, 2)));
    CHECK(m2[0] == expected);
}

TEST_CASE("reduction is idempotent on the basis") {
    for (int k : {1, 2}) {
        const auto ctx = MomentContext::symbolic(k);
        for (int a = 0; a <= 2 * k - 2; ++a) {
            const auto e = reduce_moment(a, ctx);
            for (int m = 0; m < ctx.basis_size(); ++m)
                CHECK(e[m] == (m == a ? ctx.constant(1) : ctx.zero()));
        }
    }
}

TEST_CASE("the defining relation reduces to zero") {
    for (int k : {1, 2}) {
        const auto ctx = MomentContext::symbolic(k);
        MomentTable table(ctx);
        for (int alpha = 0; alpha <= 8; ++alpha) {
            // alpha M_{alpha-1} + sum_mu mu a_mu M_{alpha+mu-1} == 0
            MomentExpr acc = me_zero(ctx);
            if (alpha > 0) me_add_scaled(acc, table.get(alpha - 1), ctx.constant(alpha));
            for (int mu = 1; mu <= 2 * k; ++mu)
                me_add_scaled(acc, table.get(alpha + mu - 1), sym(ctx, mu) * ctx.constant(mu));
            CHECK(me_is_zero(acc));
        }
    }
}

TEST_CASE("gaussian specialization recovers double factorials") {
    // k = 1, a = (0, -1/2): M_alpha / M_0 = (alpha-1)!! for even alpha
    const auto ctx = MomentContext::numeric(1, {Rational(0), Rational(-1, 2)});
    MomentTable table(ctx);
    for (int alpha = 0; alpha <= 10; ++alpha) {
        const auto e = table.get(alpha);
        REQUIRE(e.size() == 1);
        REQUIRE(e[0].is_constant());
        CHECK(e[0].constant_value() == wick::gaussian_moment(alpha));
    }
}

TEST_CASE("numeric context validation") {
    CHECK_THROWS_AS(MomentContext::numeric(1, {Rational(1), Rational(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MomentContext::numeric(2, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("w vectors start at M_j z^{1-n}") {
    for (int k : {1, 2}) {
        const auto ctx = MomentContext::symbolic(k);
        for (int n : {1, 2, 3}) {
            for (int j = 0; j < n; ++j) {
                const auto w = build_w(j, n, ctx, 6);
                CHECK(w.lo == 1 - n);
                CHECK(w.hi() == 6);
                const auto& lead = w.at(1 - n);
                const auto expect = reduce_moment(j, ctx);
                for (int m = 0; m < ctx.basis_size(); ++m) CHECK(lead[m] == expect[m]);
            }
        }
        CHECK_THROWS_AS(build_w(3, 3, ctx, 6), std::invalid_argument);
    }
    // n = 1: w_0 is the plain reduced moment sequence starting at z^0
    const auto ctx = MomentContext::symbolic(1);
    const auto w0 = build_w(0, 1, ctx, 5);
    for (int r = 0; r <= 5; ++r) {
        const auto expect = reduce_moment(r, ctx);
        CHECK(w0.at(r)[0] == expect[0]);
    }
}

TEST_CASE("operator action on single monomials") {
    const int n = 2;
    const auto ctx = MomentContext::symbolic(1);
    // L_0 z^m = (m + (3n-1)/2) z^m + sum_mu mu a_mu z^{m-mu}
    const auto img = apply_L_monomial(0, n, ctx, 3, ctx.constant(1));
    CHECK(img.at(3) == ctx.constant(Rational(3) + Rational(3 * n - 1, 2)));
    CHECK(img.at(2) == sym(ctx, 1));
    CHECK(img.at(1) == sym(ctx, 2) * ctx.constant(2));

    // L_{-1} z^{-n}: the z^{-n+1} coefficient cancels exactly
    const auto tail = apply_L_monomial(-1, n, ctx, -n, ctx.constant(1));
    CHECK(tail.find(-n + 1) == tail.end());
    for (const auto& [p, c] : tail) CHECK(p <= -n);
}

TEST_CASE("stability remainders stay below the w window") {
    for (int k : {1, 2}) {
        const auto ctx = MomentContext::symbolic(k);
        for (int n : {1, 2}) {
            for (int j = 0; j < n; ++j) {
                for (int i : {-1, 0, 1}) {
                    const auto rem = stability_remainder(i, j, n, ctx, 8);
                    for (int p = std::max(rem.lo, 1 - n); p <= rem.hi(); ++p)
                        CHECK(me_is_zero(rem.at(p)));
                }
            }
        }
    }
}

TEST_CASE("the L_1 remainder carries M_j at z^{-n}") {
    // the derivative part contributes n M_j there and the mu-sum lands
    // -(j+1) M_j on top of it, so the reduced coefficient is (n-j-1) M_j
    const auto ctx = MomentContext::symbolic(1);
    for (int n : {2, 3}) {
        for (int j = 0; j < n; ++j) {
            const auto rem = stability_remainder(1, j, n, ctx, 8);
            MomentExpr expect = me_zero(ctx);
            me_add_scaled(expect, reduce_moment(j, ctx), ctx.constant(n - j - 1));
            const auto& at_n = rem.at(-n);
            for (int m = 0; m < ctx.basis_size(); ++m) CHECK(at_n[m] == expect[m]);
        }
    }
}

TEST_CASE("stability with generic witnesses, symbolic coefficients") {
    for (int k : {1, 2}) {
        const auto ctx = MomentContext::symbolic(k);
        for (int n : {1, 2, 3}) {
            for (int i : {-1, 0, 1}) {
                const auto rep = check_stability(i, n, ctx, 10);
                CHECK(rep.ok);
                CHECK(rep.witness_matches_predicted);
                INFO("i=", i, " n=", n, " k=", k, " note=", rep.note);
                REQUIRE(rep.witness.size() == static_cast<std::size_t>(n));
                for (int j = 0; j < n; ++j) {
                    const auto pred = predicted_witness(i, j, n);
                    for (int l = 0; l < n; ++l)
                        CHECK(rep.witness[j][l] == ctx.constant(pred[l]));
                }
            }
        }
    }
}

TEST_CASE("stability with random rational coefficients") {
    const auto ctx1 = MomentContext::numeric(1, {Rational(1, 3), Rational(-2)});
    const auto ctx2 =
        MomentContext::numeric(2, {Rational(1, 3), Rational(-2), Rational(1, 5), Rational(-1, 2)});
    for (const auto& ctx : {ctx1, ctx2}) {
        for (int n : {1, 2, 3}) {
            for (int i : {-1, 0, 1}) {
                const auto rep = check_stability(i, n, ctx, 10);
                CHECK(rep.ok);
                CHECK(rep.witness_matches_predicted);
            }
        }
    }
}

TEST_CASE("witt relations on a window") {
    for (int k : {1, 2}) {
        const auto ctx = MomentContext::symbolic(k);
        for (int n : {1, 2}) {
            for (int i = -2; i <= 2; ++i)
                for (int j = -2; j <= 2; ++j) CHECK(check_witt(i, j, n, ctx, 2 * k + 6));
        }
    }
    // numeric coefficients too
    const auto ctx = MomentContext::numeric(1, {Rational(2), Rational(-1)});
    CHECK(check_witt(-1, 1, 2, ctx, 8));
}

TEST_CASE("polyfrac arithmetic sanity") {
    const int nv = 2;
    const PolyFrac a1 = PolyFrac::from_poly(MultiPoly::variable(nv, 0));
    const PolyFrac a2 = PolyFrac::from_poly(MultiPoly::variable(nv, 1));
    const PolyFrac x = a1 / a2;
    CHECK(x * a2 == a1);
    CHECK((x + x) == PolyFrac(nv, Rational(2)) * x);
    CHECK((x - x).is_zero());
    const PolyFrac y = (a1 * a1 - a2 * a2) / (a1 + a2);
    CHECK(y * (a1 + a2) == a1 * a1 - a2 * a2);
    CHECK_THROWS_AS(a1 / PolyFrac(nv), std::invalid_argument);
    // constant collapse
    const PolyFrac c = (a1 * PolyFrac(nv, Rational(3))) / a1;
    CHECK(c.is_constant());
    CHECK(c.constant_value() == 3);
}
