#include <matint/stabilizer.hpp>

#include <sstream>

namespace matint::stab {

MomentContext MomentContext::symbolic(int k) {
    if (k < 1) throw std::invalid_argument("MomentContext: need k >= 1");
    MomentContext ctx;
    ctx.k = k;
    for (int mu = 1; mu <= 2 * k; ++mu)
        ctx.a.push_back(PolyFrac::from_poly(MultiPoly::variable(2 * k, mu - 1)));
    return ctx;
}

MomentContext MomentContext::numeric(int k, const std::vector<Rational>& values) {
    if (k < 1) throw std::invalid_argument("MomentContext: need k >= 1");
    if (static_cast<int>(values.size()) != 2 * k)
        throw std::invalid_argument("MomentContext: need exactly 2k values");
    if (values.back() == 0)
        throw std::invalid_argument("MomentContext: a_{2k} must be nonzero");
    MomentContext ctx;
    ctx.k = k;
    for (const Rational& v : values) ctx.a.push_back(PolyFrac(2 * k, v));
    return ctx;
}

MomentExpr me_zero(const MomentContext& ctx) {
    return MomentExpr(ctx.basis_size(), ctx.zero());
}

bool me_is_zero(const MomentExpr& e) {
    for (const auto& c : e)
        if (!c.is_zero()) return false;
    return true;
}

void me_add_scaled(MomentExpr& dst, const MomentExpr& src, const PolyFrac& f) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < dst.size(); ++i) {
        if (src[i].is_zero()) continue;
        dst[i] += src[i] * f;
    }
}

MomentTable::MomentTable(MomentContext ctx) : ctx_(std::move(ctx)) {}

const MomentExpr& MomentTable::get(int alpha) {
    if (alpha < 0) throw std::invalid_argument("MomentTable: negative moment index");
    while (static_cast<int>(table_.size()) <= alpha) {
        const int a = static_cast<int>(table_.size());
        MomentExpr e = me_zero(ctx_);
        if (a <= 2 * ctx_.k - 2) {
            e[a] = ctx_.constant(1);
        } else {
            // M_{beta+2k-1} = -(beta M_{beta-1} + sum_{mu<2k} mu a_mu M_{beta+mu-1}) / (2k a_{2k})
            const int beta = a - (2 * ctx_.k - 1);
            if (beta > 0) me_add_scaled(e, table_[beta - 1], ctx_.constant(beta));
            for (int mu = 1; mu <= 2 * ctx_.k - 1; ++mu)
                me_add_scaled(e, table_[beta + mu - 1], ctx_.a[mu - 1] * ctx_.constant(mu));
            const PolyFrac divisor = ctx_.a[2 * ctx_.k - 1] * ctx_.constant(2 * ctx_.k);
            for (auto& c : e) c = -(c / divisor);
        }
        table_.push_back(std::move(e));
    }
    return table_[alpha];
}

MomentExpr reduce_moment(int alpha, const MomentContext& ctx) {
    MomentTable t(ctx);
    return t.get(alpha);
}

LaurentVec build_w(int j, int n, const MomentContext& ctx, int trunc) {
    if (j < 0 || j >= n) throw std::invalid_argument("build_w: need 0 <= j <= n-1");
    MomentTable table(ctx);
    LaurentVec w;
    w.lo = 1 - n;
    for (int r = 0; r <= trunc + n - 1; ++r) w.coeffs.push_back(table.get(r + j));
    return w;
}

namespace {

Rational l_constant(int i, int n) { return Rational((3 * n - 1) + i * (n - 1), 2); }

}  // namespace

LaurentVec apply_L(int i, int n, const MomentContext& ctx, const LaurentVec& v) {
    if (i < -1 || i > 1) throw std::invalid_argument("apply_L: i must be -1, 0 or 1");
    LaurentVec out;
    out.lo = v.lo - i - 2 * ctx.k;
    const int out_hi = v.hi() - i - 2 * ctx.k;
    if (out_hi < out.lo) throw std::invalid_argument("apply_L: insufficient window");
    out.coeffs.assign(out_hi - out.lo + 1, me_zero(ctx));
    const Rational kappa = l_constant(i, n);
    for (int p = v.lo; p <= v.hi(); ++p) {
        const MomentExpr& c = v.at(p);
        if (me_is_zero(c)) continue;
        // z^{1-i} d/dz and the constant term both land on z^{p-i}
        if (out.in_window(p - i))
            me_add_scaled(out.at(p - i), c, ctx.constant(Rational(p) + kappa));
        for (int mu = 1; mu <= 2 * ctx.k; ++mu) {
            const int q = p - i - mu;
            if (out.in_window(q)) me_add_scaled(out.at(q), c, ctx.a[mu - 1] * ctx.constant(mu));
        }
    }
    return out;
}

std::map<int, PolyFrac> apply_L_monomial(int i, int n, const MomentContext& ctx, int m,
                                         const PolyFrac& c) {
    std::map<int, PolyFrac> out;
    auto add = [&](int p, const PolyFrac& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = out.emplace(p, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    add(m - i, c * ctx.constant(Rational(m) + l_constant(i, n)));
    for (int mu = 1; mu <= 2 * ctx.k; ++mu)
        add(m - i - mu, c * ctx.a[mu - 1] * ctx.constant(mu));
    return out;
}

std::vector<Rational> predicted_witness(int i, int j, int n) {
    std::vector<Rational> c(n, Rational(0));
    switch (i) {
        case -1:
            if (j >= 1) c[j - 1] = Rational(-j);
            break;
        case 0:
            c[j] = Rational(n + 1, 2) - Rational(j + 1);
            break;
        case 1:
            if (j + 1 < n) c[j + 1] = Rational(n - j - 1);
            break;
        default:
            throw std::invalid_argument("predicted_witness: i must be -1, 0 or 1");
    }
    return c;
}

LaurentVec stability_remainder(int i, int j, int n, const MomentContext& ctx, int trunc) {
    LaurentVec rem = apply_L(i, n, ctx, build_w(j, n, ctx, trunc));
    const std::vector<Rational> pred = predicted_witness(i, j, n);
    for (int l = 0; l < n; ++l) {
        if (pred[l] == 0) continue;
        const LaurentVec wl = build_w(l, n, ctx, trunc);
        const PolyFrac f = ctx.constant(-pred[l]);
        for (int p = std::max(rem.lo, wl.lo); p <= std::min(rem.hi(), wl.hi()); ++p)
            me_add_scaled(rem.at(p), wl.at(p), f);
    }
    return rem;
}

namespace {

// Incremental exact row reduction: keeps at most `unknowns` pivot rows;
// each incoming row is reduced against them and either absorbed as a new
// pivot, discarded as redundant, or flags an inconsistency.
struct EchelonSolver {
    int unknowns;
    std::vector<std::vector<PolyFrac>> pivot_rows;  // augmented rows
    std::vector<int> pivot_cols;
    bool inconsistent = false;

    explicit EchelonSolver(int u) : unknowns(u) {}

    void feed(std::vector<PolyFrac> row) {
        for (std::size_t r = 0; r < pivot_rows.size(); ++r) {
            const int pc = pivot_cols[r];
            if (row[pc].is_zero()) continue;
            const PolyFrac f = row[pc] / pivot_rows[r][pc];
            for (int c = 0; c <= unknowns; ++c) row[c] -= f * pivot_rows[r][c];
        }
        int lead = -1;
        for (int c = 0; c < unknowns; ++c)
            if (!row[c].is_zero()) {
                lead = c;
                break;
            }
        if (lead < 0) {
            if (!row[unknowns].is_zero()) inconsistent = true;
            return;
        }
        pivot_cols.push_back(lead);
        pivot_rows.push_back(std::move(row));
    }

    bool full_rank() const { return static_cast<int>(pivot_rows.size()) == unknowns; }

    std::vector<PolyFrac> solve(const MomentContext& ctx) const {
        std::vector<PolyFrac> sol(unknowns, ctx.zero());
        for (int r = static_cast<int>(pivot_rows.size()) - 1; r >= 0; --r) {
            PolyFrac acc = pivot_rows[r][unknowns];
            for (int c = pivot_cols[r] + 1; c < unknowns; ++c)
                acc -= pivot_rows[r][c] * sol[c];
            sol[pivot_cols[r]] = acc / pivot_rows[r][pivot_cols[r]];
        }
        return sol;
    }
};

}  // namespace

StabilityReport check_stability(int i, int n, const MomentContext& ctx, int trunc) {
    if (i < -1 || i > 1) throw std::invalid_argument("check_stability: i must be -1, 0 or 1");
    if (n < 1) throw std::invalid_argument("check_stability: need n >= 1");
    StabilityReport report;
    report.ok = true;
    report.witness_matches_predicted = true;

    std::vector<LaurentVec> w;
    for (int l = 0; l < n; ++l) w.push_back(build_w(l, n, ctx, trunc));

    for (int j = 0; j < n; ++j) {
        const LaurentVec img = apply_L(i, n, ctx, w[j]);
        const int p_lo = 1 - n;       // everything below is inside the tail span
        const int p_hi = img.hi();
        if (p_hi < p_lo) throw std::invalid_argument("check_stability: insufficient window");

        EchelonSolver solver(n);
        for (int p = p_lo; p <= p_hi; ++p) {
            for (int m = 0; m < ctx.basis_size(); ++m) {
                std::vector<PolyFrac> row;
                row.reserve(n + 1);
                for (int l = 0; l < n; ++l) row.push_back(w[l].at(p)[m]);
                row.push_back(img.at(p)[m]);
                solver.feed(std::move(row));
            }
        }
        if (solver.inconsistent) {
            report.ok = false;
            report.note += "no combination of w_0..w_{n-1} matches L_" + std::to_string(i) +
                           " w_" + std::to_string(j) + "; ";
            report.witness.emplace_back();
            continue;
        }
        if (!solver.full_rank()) {
            report.ok = false;
            report.note += "witness for L_" + std::to_string(i) + " w_" + std::to_string(j) +
                           " is not unique; ";
            report.witness.emplace_back();
            continue;
        }
        std::vector<PolyFrac> c = solver.solve(ctx);

        // confirm the full remainder lies at exponents <= -n
        LaurentVec rem = img;
        for (int l = 0; l < n; ++l) {
            const PolyFrac f = -c[l];
            for (int p = std::max(rem.lo, w[l].lo); p <= rem.hi(); ++p)
                me_add_scaled(rem.at(p), w[l].at(p), f);
        }
        for (int p = std::max(rem.lo, 1 - n); p <= rem.hi(); ++p) {
            if (!me_is_zero(rem.at(p))) {
                report.ok = false;
                report.note += "remainder of L_" + std::to_string(i) + " w_" +
                               std::to_string(j) + " sticks out at z^" + std::to_string(p) + "; ";
                break;
            }
        }

        const std::vector<Rational> pred = predicted_witness(i, j, n);
        for (int l = 0; l < n; ++l)
            if (!(c[l] == ctx.constant(pred[l]))) report.witness_matches_predicted = false;
        report.witness.push_back(std::move(c));
    }

    // tail vectors z^{-n-t}: the image must stay at exponents <= -n
    for (int t = 0; t <= 2; ++t) {
        const auto img = apply_L_monomial(i, n, ctx, -n - t, ctx.constant(1));
        for (const auto& [p, coeff] : img) {
            if (p > -n && !coeff.is_zero()) {
                report.ok = false;
                report.note += "tail vector z^" + std::to_string(-n - t) + " leaks to z^" +
                               std::to_string(p) + "; ";
            }
        }
    }
    return report;
}

bool check_witt(int i, int j, int n, const MomentContext& ctx, int window) {
    for (int m = -window; m <= window; ++m) {
        // [L_i, L_j] z^m - (i-j) L_{i+j} z^m, all exact Laurent polynomials
        std::map<int, PolyFrac> acc;
        auto accumulate = [&](const std::map<int, PolyFrac>& part, const Rational& sign) {
            for (const auto& [p, c] : part) {
                auto [it, inserted] = acc.emplace(p, c * PolyFrac(ctx.nvars(), sign));
                if (!inserted) it->second += c * PolyFrac(ctx.nvars(), sign);
            }
        };
        const PolyFrac one = ctx.constant(1);
        for (const auto& [p, c] : apply_L_monomial(j, n, ctx, m, one))
            accumulate(apply_L_monomial(i, n, ctx, p, c), Rational(1));
        for (const auto& [p, c] : apply_L_monomial(i, n, ctx, m, one))
            accumulate(apply_L_monomial(j, n, ctx, p, c), Rational(-1));
        accumulate(apply_L_monomial(i + j, n, ctx, m, one), Rational(j - i));
        for (const auto& [p, c] : acc)
            if (!c.is_zero()) return false;
    }
    return true;
}

}  // namespace matint::stab
