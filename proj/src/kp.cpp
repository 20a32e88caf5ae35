#include <matint/kp.hpp>

#include <random>

#include <matint/wick.hpp>

namespace matint::kp {

std::shared_ptr<const VariableSpec> T_variables(int num) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int a = 1; a <= num; ++a) {
        names.push_back("T" + std::to_string(a));
        weights.push_back(a);
    }
    return VariableSpec::make(std::move(names), std::move(weights));
}

WeightedSeries<Rational> schur_p(int r, int num_vars, int trunc) {
    auto vars = T_variables(num_vars);
    WeightedSeries<Rational> out(vars, trunc);
    if (r < 0 || r > trunc) return out;
    Mono m(num_vars, 0);
    // exponent vectors with sum alpha * m[alpha-1] = r
    auto rec = [&](auto&& self, int alpha, int left, BigInt denom) -> void {
        if (alpha > num_vars) {
            if (left == 0) out.add_term(m, Rational(1, denom));
            return;
        }
        if (left == 0) {
            self(self, num_vars + 1, 0, denom);
            return;
        }
        BigInt d = denom;
        for (int cnt = 0; cnt * alpha <= left; ++cnt) {
            m[alpha - 1] = cnt;
            if (cnt > 0) d *= cnt;
            self(self, alpha + 1, left - cnt * alpha, d);
        }
        m[alpha - 1] = 0;
    };
    rec(rec, 1, r, BigInt(1));
    return out;
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (int r = k + 1; r < n; ++r) {
            if (m[r][k] == 0) continue;
            const Rational f = m[r][k] / m[k][k];
            for (int c = k; c < n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    return det;
}

Rational top_minor_det(const MomentMatrix& m) {
    if (m.rows < m.n) throw std::invalid_argument("top_minor_det: fewer rows than columns");
    std::vector<std::vector<Rational>> top(m.n, std::vector<Rational>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) top[i][j] = m.at(i, j);
    return rational_det(top);
}

namespace {

using Series = WeightedSeries<Rational>;

Series series_det_cofactor(const std::vector<std::vector<Series>>& m,
                           std::vector<int> rows, std::vector<int> cols) {
    const int n = static_cast<int>(rows.size());
    if (n == 1) return m[rows[0]][cols[0]];
    Series acc(m[0][0].vars_ptr(), m[0][0].trunc());
    for (int i = 0; i < n; ++i) {
        std::vector<int> sub_rows;
        for (int r = 0; r < n; ++r)
            if (r != i) sub_rows.push_back(rows[r]);
        std::vector<int> sub_cols(cols.begin() + 1, cols.end());
        Series minor = series_det_cofactor(m, sub_rows, sub_cols);
        Series term = series_mul(m[rows[i]][cols[0]], minor);
        acc = (i % 2 == 0) ? series_add(acc, term) : series_sub(acc, term);
    }
    return acc;
}

// elimination with constant-term pivoting; valid on the big cell
Series series_det_lu(std::vector<std::vector<Series>> m) {
    const int n = static_cast<int>(m.size());
    Series det = Series::constant(m[0][0].vars_ptr(), m[0][0].trunc(), Rational(1));
    bool negate = false;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k].constant_term() != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw std::logic_error("series_det: no invertible pivot (big-cell violated)");
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        det = series_mul(det, m[k][k]);
        const Series inv = series_inverse(m[k][k]);
        for (int r = k + 1; r < n; ++r) {
            if (m[r][k].is_zero()) continue;
            const Series f = series_mul(m[r][k], inv);
            for (int c = k; c < n; ++c)
                m[r][c] = series_sub(m[r][c], series_mul(f, m[k][c]));
        }
    }
    return negate ? series_neg(det) : det;
}

Series series_det(const std::vector<std::vector<Series>>& m) {
    const int n = static_cast<int>(m.size());
    if (n <= 4) {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        return series_det_cofactor(m, idx, idx);
    }
    return series_det_lu(m);
}

Rational rand_small(std::mt19937_64& eng, bool nonzero_only = false) {
    // explicit modular draws: identical sequences on every platform
    for (;;) {
        const long num = static_cast<long>(eng() % 19) - 9;
        const long den = static_cast<long>(eng() % 3) + 1;
        if (nonzero_only && num == 0) continue;
        return Rational(num, den);
    }
}

}  // namespace

WeightedSeries<Rational> tau_det(const MomentMatrix& m, int trunc) {
    if (m.n < 1) throw std::invalid_argument("tau_det: empty moment matrix");
    if (m.rows < m.n + trunc)
        throw std::invalid_argument("tau_det: too few moment rows for requested trunc");
    if (top_minor_det(m) == 0)
        throw std::invalid_argument("tau_det: singular top minor (big-cell violated)");
    auto vars = T_variables(trunc > 0 ? trunc : 1);
    std::vector<Series> p;  // p[w] = weight-w piece
    for (int w = 0; w <= trunc; ++w) p.push_back(schur_p(w, trunc > 0 ? trunc : 1, trunc));
    std::vector<std::vector<Series>> entries(m.n, std::vector<Series>(m.n, Series(vars, trunc)));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            Series e(vars, trunc);
            for (int w = 0; w <= trunc; ++w) {
                const Rational& x = m.at(w + i, j);
                if (x == 0) continue;
                e = series_add(e, series_scale(p[w], x));
            }
            entries[i][j] = std::move(e);
        }
    return series_det(entries);
}

WeightedSeries<Rational> u_from_tau(const WeightedSeries<Rational>& tau) {
    const Rational c0 = tau.constant_term();
    if (c0 == 0) throw std::invalid_argument("u_from_tau: zero constant term");
    const Series normalized = series_scale(tau, Rational(1) / c0);
    return series_derive(series_derive(series_log(normalized), "T1"), "T1");
}

WeightedSeries<Rational> kp_residual(const WeightedSeries<Rational>& u) {
    for (const char* v : {"T1", "T2", "T3"})
        if (u.vars().index_of(v) < 0)
            throw std::invalid_argument(std::string("kp_residual: missing variable ") + v);
    const Series u1 = series_derive(u, "T1");
    const Series u11 = series_derive(u1, "T1");
    const Series u111 = series_derive(u11, "T1");
    const Series u22 = series_derive(series_derive(u, "T2"), "T2");
    const Series u3 = series_derive(u, "T3");

    Series inner = series_sub(u3, series_scale(u111, Rational(1, 4)));
    inner = series_sub(inner, series_scale(series_mul(u, u1), Rational(3)));
    return series_sub(series_scale(u22, Rational(3, 4)), series_derive(inner, "T1"));
}

void validate(const SolitonData& data) {
    if (data.n < 1) throw std::invalid_argument("SolitonData: n must be >= 1");
    if (data.M() < data.n) throw std::invalid_argument("SolitonData: need M >= n");
    for (int i = 0; i < data.M(); ++i)
        for (int j = i + 1; j < data.M(); ++j)
            if (data.lambda[i] == data.lambda[j])
                throw std::invalid_argument("SolitonData: repeated spectral point");
    if (static_cast<int>(data.c.size()) != data.M())
        throw std::invalid_argument("SolitonData: coefficient rows != M");
    for (const auto& row : data.c)
        if (static_cast<int>(row.size()) != data.n)
            throw std::invalid_argument("SolitonData: coefficient row width != n");
}

WeightedSeries<Rational> soliton_tau(const SolitonData& data, int trunc) {
    validate(data);
    const int nv = std::max(1, trunc);
    auto vars = T_variables(nv);
    Series out(vars, trunc);

    std::vector<int> subset(data.n);
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == data.n) {
            // Vandermonde of the chosen lambdas and the matching minor of c
            Rational vdm = 1;
            for (int a = 0; a < data.n; ++a)
                for (int b = a + 1; b < data.n; ++b)
                    vdm *= data.lambda[subset[b]] - data.lambda[subset[a]];
            std::vector<std::vector<Rational>> minor(data.n, std::vector<Rational>(data.n));
            for (int a = 0; a < data.n; ++a)
                for (int j = 0; j < data.n; ++j) minor[a][j] = data.c[subset[a]][j];
            const Rational w = vdm * rational_det(std::move(minor));
            if (w == 0) return;
            Series eta(vars, trunc);
            for (int a = 0; a < data.n; ++a) {
                Rational pw = 1;
                for (int alpha = 1; alpha <= nv; ++alpha) {
                    pw *= data.lambda[subset[a]];
                    if (pw == 0) break;
                    Mono mono(nv, 0);
                    mono[alpha - 1] = 1;
                    eta.add_term(std::move(mono), pw);
                }
            }
            out = series_add(out, series_scale(series_exp(eta), w));
            return;
        }
        for (int i = from; i <= data.M() - (data.n - pos); ++i) {
            subset[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

MomentMatrix soliton_moment_matrix(const SolitonData& data, int rows) {
    validate(data);
    MomentMatrix m;
    m.n = data.n;
    m.rows = rows;
    m.xi.assign(rows, std::vector<Rational>(data.n, Rational(0)));
    std::vector<Rational> pw(data.M(), Rational(1));
    for (int r = 0; r < rows; ++r) {
        for (int j = 0; j < data.n; ++j) {
            Rational acc = 0;
            for (int i = 0; i < data.M(); ++i) acc += data.c[i][j] * pw[i];
            m.xi[r][j] = acc;
        }
        for (int i = 0; i < data.M(); ++i) pw[i] *= data.lambda[i];
    }
    return m;
}

MomentMatrix gaussian_moment_matrix(int n, int rows) {
    if (n < 1 || rows < n) throw std::invalid_argument("gaussian_moment_matrix: need rows >= n >= 1");
    MomentMatrix m;
    m.n = n;
    m.rows = rows;
    m.xi.assign(rows, std::vector<Rational>(n));
    for (int r = 0; r < rows; ++r)
        for (int j = 0; j < n; ++j) m.xi[r][j] = wick::gaussian_moment(r + j);
    if (top_minor_det(m) == 0)
        throw std::logic_error("gaussian_moment_matrix: top minor unexpectedly singular");
    return m;
}

MomentMatrix random_moment_matrix(int n, int rows, std::uint64_t seed) {
    if (n < 1 || rows < n) throw std::invalid_argument("random_moment_matrix: need rows >= n >= 1");
    std::mt19937_64 eng(seed);
    MomentMatrix m;
    m.n = n;
    m.rows = rows;
    for (;;) {
        m.xi.assign(rows, std::vector<Rational>(n));
        for (int r = 0; r < rows; ++r)
            for (int j = 0; j < n; ++j) m.xi[r][j] = rand_small(eng);
        if (top_minor_det(m) != 0) return m;
    }
}

SolitonData random_soliton_data(int n, int M, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    SolitonData data;
    data.n = n;
    for (;;) {
        data.lambda.clear();
        data.c.assign(M, std::vector<Rational>(n));
        while (static_cast<int>(data.lambda.size()) < M) {
            const Rational l = rand_small(eng, true);
            if (std::find(data.lambda.begin(), data.lambda.end(), l) == data.lambda.end())
                data.lambda.push_back(l);
        }
        for (int i = 0; i < M; ++i)
            for (int j = 0; j < n; ++j) data.c[i][j] = rand_small(eng);
        const MomentMatrix m = soliton_moment_matrix(data, n);
        if (top_minor_det(m) != 0) return data;
    }
}

bool series_proportional(const WeightedSeries<Rational>& a, const WeightedSeries<Rational>& b) {
    if (!(a.vars() == b.vars())) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    const Rational ratio = itb->second / ita->second;
    for (; ita != a.terms().end() && itb != b.terms().end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        if (ita->second * ratio != itb->second) return false;
    }
    return ita == a.terms().end() && itb == b.terms().end();
}

MomentMatrix moment_matrix_from_json(const nlohmann::json& j) {
    MomentMatrix m;
    m.n = j.at("n").get<int>();
    m.rows = j.at("rows").get<int>();
    const auto& xi = j.at("xi");
    if (static_cast<int>(xi.size()) != m.rows)
        throw std::invalid_argument("moment matrix: xi rows != rows");
    for (const auto& row : xi) {
        if (static_cast<int>(row.size()) != m.n)
            throw std::invalid_argument("moment matrix: xi row width != n");
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(rat_parse(cell.get<std::string>()));
        m.xi.push_back(std::move(r));
    }
    return m;
}

nlohmann::ordered_json moment_matrix_to_json(const MomentMatrix& m) {
    nlohmann::ordered_json j;
    j["n"] = m.n;
    j["rows"] = m.rows;
    auto xi = nlohmann::ordered_json::array();
    for (const auto& row : m.xi) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& cell : row) r.push_back(rat_str(cell));
        xi.push_back(std::move(r));
    }
    j["xi"] = std::move(xi);
    return j;
}

SolitonData soliton_from_json(const nlohmann::json& j) {
    SolitonData d;
    d.n = j.at("n").get<int>();
    for (const auto& l : j.at("lambda")) d.lambda.push_back(rat_parse(l.get<std::string>()));
    for (const auto& row : j.at("c")) {
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(rat_parse(cell.get<std::string>()));
        d.c.push_back(std::move(r));
    }
    validate(d);
    return d;
}

}  // namespace matint::kp
