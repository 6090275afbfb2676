#pragma once

#include "hochkit/keller.hpp"

namespace hk {

// Truncated formal series on g, i.e. elements of Ŝ(g∨) cut at a given order.
// Keys are weakly increasing multisets of coordinate indices.
using Series = Vec;

int series_order(const Series& s);
Series series_truncate(const Series& s, int order);
Series series_mul(const Series& a, const Series& b, int order);
// exp(s) for s without constant term.
Series series_exp(const Series& s, int order);
// Inverse of a series with constant term 1.
Series series_inverse(const Series& s, int order);

// Coefficients c_1..c_order of log((1 − e^{−t})/t).
std::vector<Q> log_duflo_coefficients(int order);
// The polynomial x ↦ tr(ad_x^k).
Series trace_ad_power(const LieAlgebra& g, int k);

struct DufloSeries {
    int order = 0;
    Series log_j, j, j_sqrt;
};
// J = exp(Σ c_k tr(ad_x^k)) and J^{1/2} = exp(½ Σ c_k tr(ad_x^k)).
DufloSeries duflo_series(const LieAlgebra& g, int order);

// The Atiyah cocycle at(e_i, e_j) = s⁻¹[se_i, se_j], as a bracket table.
std::map<std::pair<int, int>, Vec> atiyah_cocycle(const LieAlgebra& g);
// td(x) = Ber(at(x,−)/(1 − e^{−at(x,−)})), computed as the inverse of the
// determinant of the matrix series of A/(1 − e^{−A}) on the odd space g[1].
Series todd_series(const LieAlgebra& g, int order);

// Coadjoint action of e_i on polynomials on g.
Series coadjoint_action(const LieAlgebra& g, int i, const Series& s);
bool is_invariant(const LieAlgebra& g, const Series& s);

// Constant-coefficient differential operator action of S on Sg, with the
// coordinate ξ^k acting as ∂/∂e_k.
Vec series_contraction(const Series& s, const Vec& p);

// Symmetrization Sg → Ug.
Vec pbw(const Enveloping& ug, const Vec& p);

// Polyvector fields S(g[1])∨ ⊗ Sg with keys [|ξ|, ξ..., m...].
Key polyvector_key(const Key& xi, const Key& m);
std::pair<Key, Key> split_polyvector(const Key& k);
Vec polyvector_product(const DualOdd& dual, const Vec& s, const Vec& t);
// Todd^{1/2} contraction: ξ ⊗ m ↦ ξ ⊗ S·m.
Vec polyvector_contract(const Series& s, const Vec& t);
// Seeded polyvector of total degree n with Sg-part of degree at most m_bound.
Vec random_polyvector(int dim, int n, int m_bound, std::uint64_t seed);

// Φ̃_T(ξ ⊗ m) : y ↦ ⟨ξ, y⟩ m.
CeCochain phi_t(const Vec& t);
// Inverse of Φ̃_T from the values on every odd word.
Vec phi_t_inverse(int dim, const CeCochain& f);
// d_T = [d_g, −], realized as Φ̃_T⁻¹ ∘ d_CE^{Sg} ∘ Φ̃_T.
Vec d_t(const LieAlgebra& g, const Vec& t);

// d_CE for Sg or Ug coefficients ("sg" or "ug").
CeCochain ce_d(const LieAlgebra& g, const CeModule& m, const CeCochain& f);
// Convolution product on Hom(S(g[1]), M) for a commutative or associative M of degree 0.
CeCochain convolution(const OddSym& sym, const std::function<Vec(const Vec&, const Vec&)>& mul, const CeCochain& f,
                      const CeCochain& g);

// hkr(ξ ⊗ sx₁⊙⋯⊙sx_q) = (1/q!) Σ_σ ξ ⊙ ι_{x_σ(1)} ⊗ ⋯ ⊗ ι_{x_σ(q)}.
Cochain hkr(const DualOdd& dual, const Vec& t);
// ι_x ξ = (-1)^{|x||ξ|} ξ(x ⊙ −) for a single letter x = e_j.
Vec interior(int j, const Key& xi);

// Φ̃₂(f)(x₁⊙⋯⊙x_p) = Σ_σ (-1)^σ f(sx_σ(1) ⊗ ⋯ ⊗ sx_σ(p)).
CeCochain phi2_tilde(const Cochain& f);

// An element (f_A, f_X, t) of the pullback complex hkr*Hoch(Ug ⊗ S(g[1])).
struct PullbackElement {
    Cochain a;
    XCochain x;
    Vec t;
    int max_q = 0;  // bound on the B-arity of the X-part
};
// D = d_H^A + d_H^{AX} + d_H^X + ∂_X + d_H^{XB}∘hkr + [d_g, −].
PullbackElement pullback_d(const KellerTriple& kt, const PullbackElement& e);
PullbackElement random_pullback(const KellerTriple& kt, int pbw, int total_degree, std::uint64_t seed);

int homotopy_sign(int p, int q, int r);
using SignRule = std::function<int(int, int, int)>;
// h = Σ h_{p,q,r} on the X-part; zero on the A- and T-parts. The optional
// matrix P (columns are the new basis vectors) evaluates the insertion
// Σ ε^{i₁}⊗⋯⊗ε^{i_q} ⊗ e_{i_q}⊗⋯⊗e_{i₁} in a changed basis.
CeCochain homotopy_h(const KellerTriple& kt, const XCochain& f, int max_q,
                     const std::vector<std::vector<Q>>& basis = {}, const SignRule& sign = homotopy_sign);

CeCochain psi1(const PullbackElement& e);
CeCochain psi2(const KellerTriple& kt, const PullbackElement& e);

struct HomotopyResidual {
    std::string where;  // offending odd word and tridegree
};
// ψ₁ − ψ₂ − h∘D − d_CE∘h evaluated on every odd word.
// A replacement sign rule injects a failure for negative controls.
std::optional<HomotopyResidual> homotopy_residual(const KellerTriple& kt, const PullbackElement& e,
                                                  const SignRule& sign = homotopy_sign);

// Lift of a degree-0 d_T-cocycle t to a D-cocycle (u, f_X, t) whose X-part has
// only A-linear arity (0, q) components with q ≤ max_q and values of PBW
// length ≤ pbw. Returns u, the A-part, after checking D(u, f_X, t) = 0.
std::optional<Vec> lift_degree_zero(const KellerTriple& kt, const Vec& t, int pbw, int max_q);

struct TheoremBReport {
    bool multiplicative = false;        // pbw(J^{1/2}p)² = pbw(J^{1/2}p²)
    bool plain_fails = false;           // pbw(p)² ≠ pbw(p²)
    Vec plain_witness;                  // pbw(p)² − pbw(p²)
    bool h0_agree = false;              // both routes agree on the degree-0 classes
    bool h1_agree = false;              // both routes agree on the degree-1 classes
    std::vector<int> h1_dims;           // H¹ dimensions of Sg and Ug windows
    std::vector<std::string> notes;
    bool ok() const { return multiplicative && plain_fails && h0_agree && h1_agree; }
};
// Theorem B on sl2-type algebras with a quadratic invariant p.
TheoremBReport theorem_b_check(const LieAlgebra& g, int pbw, int order);

}  // namespace hk
