#pragma once

#include "hochkit/bimodule.hpp"
#include "hochkit/lie.hpp"

namespace hk {

// X = Ug ⊗ S(g[1]) with keys [|u|, u..., x...], where u is a PBW word and x a
// strictly increasing odd word. Left Ug-module by multiplication, right
// S(g[1])∨-module by contraction.
class KellerX : public Bimodule {
public:
    KellerX(std::shared_ptr<const Enveloping> ug, std::shared_ptr<const OddSym> sym, std::shared_ptr<const DualOdd> dual)
        : ug_(std::move(ug)), sym_(std::move(sym)), dual_(std::move(dual)) {}

    static Key make(const Key& u, const Key& x);
    static std::pair<Key, Key> split(const Key& k);
    static Vec tensor(const Vec& u, const Vec& x);

    int deg(const Key& k) const override;
    Vec left(const Key& a, const Key& m) const override;
    Vec right(const Key& m, const Key& b) const override;
    Vec d(const Key& m) const override;
    // PBW words of length at most bound tensored with all odd words.
    std::vector<Key> basis(int bound) const override;
    using Bimodule::d;
    using Bimodule::left;
    using Bimodule::right;

private:
    std::shared_ptr<const Enveloping> ug_;
    std::shared_ptr<const OddSym> sym_;
    std::shared_ptr<const DualOdd> dual_;
};

struct KellerTriple {
    LieAlgebra g;
    std::shared_ptr<const Enveloping> ug;
    std::shared_ptr<const OddSym> sym;
    std::shared_ptr<const DualOdd> dual;
    std::shared_ptr<const KellerX> x;
    std::shared_ptr<const TrioComplex> trio;

    int dim() const { return g.dim(); }
    // Window of the trio complex: PBW words of length ≤ pbw, all odd words.
    TrioWindow window(int pbw, int max_p, int max_q) const;
};

// Throws ContractError naming the violating triple when g fails Jacobi.
KellerTriple build_triple(const LieAlgebra& g);

// Linear operators on X given on basis keys.
using XOperator = std::function<Vec(const Key&)>;
Vec apply_op(const XOperator& f, const Vec& v);

// ρ_A(v)(u ⊗ x) = vu ⊗ x.
XOperator rho_a(const KellerTriple& t, const Vec& v);
// ρ_B(b)(u ⊗ x) = (-1)^{|x||b|} u ⊗ (x ⌞ b), for homogeneous b.
XOperator rho_b(const KellerTriple& t, const Vec& b);
// ∂_X φ = d_X∘φ − (-1)^{|φ|} φ∘d_X for φ of degree deg.
XOperator partial_x(const KellerTriple& t, const XOperator& f, int deg);
XOperator compose_ops(const XOperator& f, const XOperator& g);
// ε_* of a Ug-linear operator, identified with S(g[1])∨ through ρ_B.
Vec epsilon_star(const KellerTriple& t, const XOperator& f);

// Residual sweep of the two top-form identities on the full bases for dimension d.
struct TopFormReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
TopFormReport top_form_check(int d);

// h_R(f)(a; u⊗x; b₁…b_q) = (-1)^{q+r+1}(-1)^{d−|x|} f(a; u⊗ω; τ⌟x, b₁, …, b_q).
XCochain h_right(const KellerTriple& t, const XCochain& f);
// h_L(f)(a₁…a_p; u⊗x; b) = (-1)^{r+1} f(a₁, …, a_p, u; 1⊗x; b).
XCochain h_left(const KellerTriple& t, const XCochain& f);

// Dimensions of ker d_R on Hom^r(X, X) and of Hom^r_B(X, X) over the window
// X^{≤pbw}, for every degree r that occurs.
struct KernelComparison {
    std::map<int, int> kernel, expected;
};
KernelComparison right_kernel_dims(const KellerTriple& t, int pbw);
// ker d_L on Hom^r(X^{≤pbw}, X^{≤pbw+extra}) against Hom^r(S(g[1]), X^{≤extra}).
KernelComparison left_kernel_dims(const KellerTriple& t, int pbw, int extra);

// The mapping cone of ε : X → k with d(↓x, c) = (−↓d_X x, ε(x)). Keys are [0]
// for (0, 1) and [1, X-key...] for ↓x. The contracting homotopy is built level
// by level of the filtration F^{-p}, processing basis vectors in (k, PBW word)
// order and taking the elimination-minimal preimage.
class ConeEpsilon {
public:
    ConeEpsilon(const KellerTriple& t, int depth);
    int depth() const { return depth_; }
    int deg(const Key& k) const;
    // Filtration level of a basis key: 0 for (0, 1), |u| + |x| for ↓(u⊗x).
    static int level(const Key& k);
    static int pbw_length(const Key& k);
    Vec d(const Key& k) const;
    Vec d(const Vec& v) const;
    // Defined on F^{-depth}; throws ContractError beyond it.
    Vec h(const Key& k) const;
    Vec h(const Vec& v) const;
    // Basis of F^{-p}; refuses p > depth.
    std::vector<Key> filtration_basis(int p) const;

private:
    const KellerTriple& t_;
    int depth_;
    std::map<Key, Vec> h_;
};

// Cone(ρ_A) for the one-dimensional abelian Lie algebra, where Ug = k[t] and
// Hom_{B-op}(X, X) ≅ Hom(S(g[1]), End k[t]). An element is probed by a column:
// column −1 returns the Ug[1] part as keys [0, n] (↓tⁿ, degree −1); column
// j ≥ 0 returns the images of t^j under the two End k[t] components as keys
// [1, n] (degree 0) and [2, n] (degree 1).
using ConeElement = std::function<Vec(int)>;
namespace cone_rho {
ConeElement left(int a, const ConeElement& m);
ConeElement right(const ConeElement& m, int a);
ConeElement d(const ConeElement& m);
ConeElement h(const ConeElement& m);
// Degree homogeneous part of m.
ConeElement part(const ConeElement& m, int degree);
bool equal(const ConeElement& m, const ConeElement& n, int columns);
}  // namespace cone_rho

// Hochschild cochains of k[t] with values in Cone(ρ_A); words hold the
// exponents of the monomial inputs.
using ConeCochain = std::function<ConeElement(const std::vector<int>&)>;
ConeCochain cone_dh(const ConeCochain& f);
ConeCochain cone_partial(const ConeCochain& f);
ConeCochain cone_H(const ConeCochain& f);
ConeCochain random_cone_cochain(int arity, int degree, std::uint64_t seed);

struct HomotopySequence {
    std::vector<ConeCochain> terms;  // 𝔥_0, …, 𝔥_K
    std::optional<int> vanishing_index;  // first k with 𝔥_k(f) = 0 on the probe window
};
// 𝔥_k = H∘(d_H∘H)^k for k ≤ K. A negative probe arity skips the vanishing search.
HomotopySequence frak_h_sequence(const ConeCochain& f, int max_k, int probe_arity, int probe_columns);
// Equality of cone cochains on words of exponents ≤ max_exp and columns ≤ columns.
bool cone_cochains_equal(const ConeCochain& f, const ConeCochain& g, int arity, int max_exp, int columns);

}  // namespace hk
