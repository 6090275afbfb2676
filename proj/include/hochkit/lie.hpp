#pragma once

#include "hochkit/algebra.hpp"
#include "hochkit/linalg.hpp"

#include <array>
#include <mutex>

namespace hk {

class LieAlgebra {
public:
    LieAlgebra(std::string name, int dim);

    // Sets [e_i, e_j] and completes [e_j, e_i] antisymmetrically.
    void set_bracket(int i, int j, const std::map<int, Q>& coeffs);
    // Sets [e_i, e_j] only, leaving [e_j, e_i] untouched.
    void set_bracket_raw(int i, int j, const std::map<int, Q>& coeffs);
    const std::map<int, Q>& bracket(int i, int j) const { return c_.at(i).at(j); }
    Q structure_constant(int i, int j, int k) const;
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    bool is_abelian() const;

    struct Report {
        bool ok = true;
        std::vector<std::array<int, 3>> violations;  // (i, j, k); k = -1 marks an antisymmetry failure
        std::string describe() const;
    };
    Report validate() const;

    static LieAlgebra abelian(int d);
    // [e1, e2] = e2.
    static LieAlgebra aff1();
    // Order e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    static LieAlgebra sl2();
    // Order x, y, z with [x,y] = z.
    static LieAlgebra heisenberg();

    static LieAlgebra from_json_text(const std::string& text);
    static LieAlgebra load(const std::string& path);
    std::string to_json_text() const;

private:
    std::string name_;
    int dim_;
    std::vector<std::vector<std::map<int, Q>>> c_;
};

// The universal enveloping algebra in PBW normal form: keys are weakly
// increasing index sequences in the generator order of the Lie algebra.
class Enveloping : public Algebra {
public:
    explicit Enveloping(LieAlgebra g) : g_(std::move(g)) {}
    int deg(const Key&) const override { return 0; }
    Vec mul(const Key& a, const Key& b) const override;
    Vec unit() const override { return Vec(Key{}); }
    // All PBW monomials of length at most bound.
    std::vector<Key> basis(int bound) const override;
    std::string show(const Key& k) const override;

    using Algebra::mul;
    // Normal form of an arbitrary word in the generators.
    Vec normal_form(const Key& word) const;
    static int filtration(const Vec& v);
    const LieAlgebra& lie() const { return g_; }

private:
    LieAlgebra g_;
    mutable std::recursive_mutex mutex_;
    mutable std::map<Key, Vec> memo_;
};

// S(g[1]) as a graded commutative algebra: keys strictly increasing, each
// letter of degree -1.
class OddSym : public Algebra {
public:
    explicit OddSym(LieAlgebra g) : g_(std::move(g)) {}
    int deg(const Key& k) const override { return -static_cast<int>(k.size()); }
    Vec mul(const Key& a, const Key& b) const override;
    Vec unit() const override { return Vec(Key{}); }
    // All subsets of size at most bound (bound < 0 means all).
    std::vector<Key> basis(int bound) const override;
    using Algebra::mul;

    // The coderivation lifted from x⊙y ↦ -s⁻¹[sx, sy].
    Vec boundary(const Key& x) const;
    Vec boundary(const Vec& v) const;
    // Graded coproduct; words have length two.
    TVec coproduct(const Key& x) const;
    // Right contraction action x ⌞ ξ of S(g[1])∨.
    Vec contract(const Key& x, const Key& xi) const;
    Vec contract(const Vec& x, const Vec& xi) const;
    Key top() const;  // ω = e1⊙…⊙ed
    const LieAlgebra& lie() const { return g_; }

private:
    LieAlgebra g_;
};

// S(g[1])∨ with the Chevalley–Eilenberg differential: keys strictly
// decreasing, each letter of degree +1.
class DualOdd : public Algebra {
public:
    explicit DualOdd(LieAlgebra g);
    int deg(const Key& k) const override { return static_cast<int>(k.size()); }
    Vec mul(const Key& a, const Key& b) const override;
    Vec d(const Key& k) const override;
    Vec unit() const override { return Vec(Key{}); }
    std::vector<Key> basis(int bound) const override;
    using Algebra::d;
    using Algebra::deg;
    using Algebra::mul;

    // Left contraction ξ ⌟ x of S(g[1]) on S(g[1])∨.
    Vec contract(const Key& xi, const Key& x) const;
    Vec contract(const Vec& xi, const Vec& x) const;
    Key top() const;  // τ = ε^d⊙…⊙ε^1
    static Key dual_of(const Key& x) { return Key(x.rbegin(), x.rend()); }
    const LieAlgebra& lie() const { return g_; }

private:
    LieAlgebra g_;
    std::map<Key, Vec> dg_;
};

// Sg with g in degree 0: keys are weakly increasing multisets.
class SymEven : public Algebra {
public:
    explicit SymEven(int dim) : dim_(dim) {}
    int deg(const Key&) const override { return 0; }
    Vec mul(const Key& a, const Key& b) const override;
    Vec unit() const override { return Vec(Key{}); }
    // Monomials of polynomial degree at most bound.
    std::vector<Key> basis(int bound) const override;
    using Algebra::mul;
    std::vector<Key> homogeneous(int degree) const;
    int dim() const { return dim_; }

private:
    int dim_;
};

// ⟨ξ, x⟩ for basis monomials of S(g[1])∨ and S(g[1]).
Q pair_dual(const Key& xi, const Key& x);
// ⟨x, ξ⟩ = (-1)^{|x||ξ|}⟨ξ, x⟩.
Q pair_flip(const Key& x, const Key& xi);
Q pair_dual(const Vec& xi, const Vec& x);
Q pair_flip(const Vec& x, const Vec& xi);

// Letter-level objects for the Chevalley–Eilenberg complex with coefficients.
struct CeModule {
    std::string tag;
    std::function<Vec(int, const Key&)> act;  // e_i · m
    std::function<int(const Key&)> deg;
    std::function<Vec(const Key&)> d;  // empty for zero differential
};
CeModule ce_module(const std::string& tag, const LieAlgebra& g, std::shared_ptr<const Enveloping> ug = nullptr);

using CeCochain = std::function<Vec(const Key&)>;
Vec ce_differential(const LieAlgebra& g, const CeModule& m, const CeCochain& f, const Key& x);

// Hom(Ug, Ug) coefficients with the action (y♦φ)(u) = φ(uy) − φ(u)y, cochains uncurried as F(x, u).
using EndCochain = std::function<Vec(const Key& x, const Key& u)>;
Vec ce_differential_end(const Enveloping& ug, const EndCochain& f, const Key& x, const Key& u);

// Adjoint-type actions.
Vec sg_action(const LieAlgebra& g, int i, const Key& m);
Vec ug_adjoint(const Enveloping& ug, int i, const Key& u);

// Invariants: for "sg" the homogeneous slice S^degree g, for "ug" the filtration slice Ug^{≤degree}.
std::vector<Vec> invariants_basis(const std::string& tag, const LieAlgebra& g, int degree);

// Cohomology dimensions of Hom(S(g[1]), M) in degrees 0..dim g. For "sg" the
// coefficient window is S^{≤bound} g, for "ug" it is Ug^{≤bound}.
std::vector<int> ce_cohomology(const std::string& tag, const LieAlgebra& g, int bound);

}  // namespace hk
