#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <matint/multipoly.hpp>
#include <matint/rational.hpp>

namespace matint::stab {

/// The coefficient data of the potential exp(sum_{mu<=2k} a_mu lambda^mu).
/// Symbolic mode carries each a_mu as a variable; numeric mode binds them to
/// rational values (a_{2k} must be nonzero, since it is the only coefficient
/// the moment reduction ever inverts). The convergence condition
/// Re(a_{2k}) < 0 of the underlying integrals has no algebraic content and
/// is deliberately not a runtime check.
struct MomentContext {
    int k = 1;
    std::vector<PolyFrac> a;  // a[mu-1] for mu = 1..2k

    static MomentContext symbolic(int k);
    static MomentContext numeric(int k, const std::vector<Rational>& values);

    int nvars() const { return 2 * k; }
    int basis_size() const { return 2 * k - 1; }
    PolyFrac zero() const { return PolyFrac(nvars()); }
    PolyFrac constant(const Rational& q) const { return PolyFrac(nvars(), q); }
};

/// Element of the moment algebra: a combination of the basis moments
/// M_0..M_{2k-2}, with rational-function coefficients in the a_mu.
using MomentExpr = std::vector<PolyFrac>;

MomentExpr me_zero(const MomentContext& ctx);
bool me_is_zero(const MomentExpr& e);
void me_add_scaled(MomentExpr& dst, const MomentExpr& src, const PolyFrac& f);

/// Memoized reduction table: every M_alpha rewritten into the basis via
/// M_{beta+2k-1} = -(beta M_{beta-1} + sum_{mu<2k} mu a_mu M_{beta+mu-1}) / (2k a_{2k}).
class MomentTable {
public:
    explicit MomentTable(MomentContext ctx);
    const MomentExpr& get(int alpha);
    const MomentContext& ctx() const { return ctx_; }

private:
    MomentContext ctx_;
    std::vector<MomentExpr> table_;
};

/// M_alpha expressed in the basis M_0..M_{2k-2}.
MomentExpr reduce_moment(int alpha, const MomentContext& ctx);

/// Truncated Laurent vector: moment-algebra coefficients at z-exponents
/// lo..lo+coeffs.size()-1.
struct LaurentVec {
    int lo = 0;
    std::vector<MomentExpr> coeffs;

    int hi() const { return lo + static_cast<int>(coeffs.size()) - 1; }
    bool in_window(int p) const { return p >= lo && p <= hi(); }
    const MomentExpr& at(int p) const { return coeffs.at(static_cast<std::size_t>(p - lo)); }
    MomentExpr& at(int p) { return coeffs.at(static_cast<std::size_t>(p - lo)); }
};

/// w_j = sum_{r>=0} M_{r+j} z^{r+1-n}, reduced, kept up to z^trunc.
LaurentVec build_w(int j, int n, const MomentContext& ctx, int trunc);

/// Exact application of L_i = z^{1-i} d/dz + ((3n-1)+i(n-1))/2 z^{-i}
/// + sum_mu mu a_mu z^{-i-mu} for i in {-1, 0, 1}; the output window shrinks
/// by i + 2k at the top.
LaurentVec apply_L(int i, int n, const MomentContext& ctx, const LaurentVec& v);

/// L_i acting on a single monomial c z^m, exact and defined for every i.
std::map<int, PolyFrac> apply_L_monomial(int i, int n, const MomentContext& ctx, int m,
                                         const PolyFrac& c);

/// The proof-predicted combination coefficients of w_0..w_{n-1} inside
/// L_i w_j (everything else lies at exponents <= -n).
std::vector<Rational> predicted_witness(int i, int j, int n);

/// L_i w_j minus the predicted combination, over the valid window.
LaurentVec stability_remainder(int i, int j, int n, const MomentContext& ctx, int trunc);

struct StabilityReport {
    bool ok = false;
    /// witness[j][l]: solved coefficient of w_l in L_i w_j (solved generically,
    /// not assumed from the proof).
    std::vector<std::vector<PolyFrac>> witness;
    bool witness_matches_predicted = false;
    std::string note;
};

/// Verifies L_i W(a) inside W(a): solves for the combination of w_0..w_{n-1}
/// matching L_i w_j above z^{-n}, checks the remainder sits at exponents
/// <= -n, and checks the tail vectors z^{-n-t}.
StabilityReport check_stability(int i, int n, const MomentContext& ctx, int trunc);

/// [L_i, L_j] = (i-j) L_{i+j} tested on the monomials z^m, |m| <= window.
bool check_witt(int i, int j, int n, const MomentContext& ctx, int window);

}  // namespace matint::stab
