#pragma once

#include "hochkit/hochschild.hpp"
#include "hochkit/lie.hpp"

namespace hk {

// A homogeneous linear map given on basis keys.
struct KeyMap {
    int degree = 0;
    std::function<Vec(const Key&)> fn;

    Vec operator()(const Key& k) const { return fn ? fn(k) : Vec(); }
    Vec apply(const Vec& v) const;
    static KeyMap zero(int degree);
};
KeyMap operator+(const KeyMap& f, const KeyMap& g);
KeyMap operator-(const KeyMap& f, const KeyMap& g);

struct LawReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void fail(std::string what);
};

// A graded coalgebra on basis keys. Elements of C ⊗ C are words of length two.
class Coalgebra {
public:
    virtual ~Coalgebra() = default;
    virtual int deg(const Key& k) const = 0;
    virtual TVec coproduct(const Key& k) const = 0;
    virtual Q counit(const Key& k) const { return k.empty() ? Q(1) : Q(0); }
    virtual Vec d(const Key&) const { return {}; }
    virtual bool has_differential() const { return false; }
    virtual bool cocommutative() const { return false; }
    // Words of length at most bound; bound < 0 asks for the whole basis when finite.
    virtual std::vector<Key> basis(int bound) const = 0;
    virtual int letters() const = 0;
    virtual int letter_degree(int l) const = 0;

    TVec coproduct(const Vec& v) const;
    Vec d(const Vec& v) const;
    int tensor_degree(const Word& w) const;
};
using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

// S(V) on letters of the given degrees: keys are weakly increasing and odd
// letters do not repeat. The coproduct is the signed unshuffle expansion.
class SymCoalgebra : public Coalgebra {
public:
    explicit SymCoalgebra(std::vector<int> letter_degrees) : degrees_(std::move(letter_degrees)) {}
    int deg(const Key& k) const override;
    TVec coproduct(const Key& k) const override;
    Vec d(const Key& k) const override { return differential_ ? differential_(k) : Vec(); }
    bool has_differential() const override { return differential_ != nullptr; }
    bool cocommutative() const override { return true; }
    std::vector<Key> basis(int bound) const override;
    int letters() const override { return static_cast<int>(degrees_.size()); }
    int letter_degree(int l) const override { return degrees_.at(l); }
    using Coalgebra::coproduct;
    using Coalgebra::d;

    Vec mul(const Key& a, const Key& b) const;
    Vec mul(const Vec& a, const Vec& b) const;
    // Installs the coderivation lifted from q as the differential.
    void set_differential(const KeyMap& q);

private:
    std::vector<int> degrees_;
    std::function<Vec(const Key&)> differential_;
};

// S(g[1]) with ∂_g, the coderivation lifted from x⊙y ↦ −s⁻¹[sx, sy].
std::shared_ptr<SymCoalgebra> lie_chains(const LieAlgebra& g);

// T(V) on letters of the given degrees with the deconcatenation coproduct.
class TensorCoalgebra : public Coalgebra {
public:
    explicit TensorCoalgebra(std::vector<int> letter_degrees) : degrees_(std::move(letter_degrees)) {}
    int deg(const Key& k) const override;
    TVec coproduct(const Key& k) const override;
    Vec d(const Key& k) const override { return differential_ ? differential_(k) : Vec(); }
    bool has_differential() const override { return differential_ != nullptr; }
    std::vector<Key> basis(int bound) const override;
    int letters() const override { return static_cast<int>(degrees_.size()); }
    int letter_degree(int l) const override { return degrees_.at(l); }
    using Coalgebra::coproduct;
    using Coalgebra::d;

    void set_differential(const KeyMap& q);

private:
    std::vector<int> degrees_;
    std::function<Vec(const Key&)> differential_;
};

// The coderivation whose cogenerator part is q : C → V (values on single-letter
// keys). Throws ContractError unless C is a symmetric or tensor coalgebra.
KeyMap coderivation_lift(const Coalgebra& c, const KeyMap& q);
// pr_V: the component of word length one.
Vec cogenerator_part(const Vec& v);
// Δ∘Q = (id⊗Q + Q⊗id)∘Δ on the basis window.
LawReport check_coderivation(const Coalgebra& c, const KeyMap& q, int bound);
// Coassociativity, counit and (when declared) cocommutativity; for dg
// coalgebras also d² = 0 and the coderivation law for d.
LawReport check_coalgebra(const Coalgebra& c, int bound);
// pr∘(Q_f∘Q_g − (−1)^{|f||g|} Q_g∘Q_f).
KeyMap coderivation_bracket(const Coalgebra& c, const KeyMap& f, const KeyMap& g);

// The convolution dg algebra Hom(C, A).
KeyMap convolution(const Coalgebra& c, const Algebra& a, const KeyMap& f, const KeyMap& g);
KeyMap convolution_unit(const Coalgebra& c, const Algebra& a);
// d_A∘f − (−1)^{|f|} f∘d_C.
KeyMap convolution_differential(const Coalgebra& c, const Algebra& a, const KeyMap& f);
// d(τ) + τ★τ.
KeyMap mc_defect(const Coalgebra& c, const Algebra& a, const KeyMap& tau);
// τ = ι∘(−s)∘pr : S(g[1]) → Ug.
KeyMap lie_twisting_cochain();

// A right graded comodule, optionally with a differential. The coaction takes
// values in words {m, c}.
class Comodule {
public:
    virtual ~Comodule() = default;
    virtual int deg(const Key& k) const = 0;
    virtual TVec coaction(const Key& k) const = 0;
    virtual Vec d(const Key&) const { return {}; }
    virtual bool has_differential() const { return false; }
    // A basis of a subcomodule; bound limits word lengths.
    virtual std::vector<Key> basis(int bound) const = 0;
    virtual const Coalgebra& coalgebra() const = 0;

    Vec d(const Vec& v) const;
    TVec coaction(const Vec& v) const;
};

// V ⊗ C with id ⊗ Δ and differential id ⊗ d_C. Keys are [v, c...].
class FreeComodule : public Comodule {
public:
    FreeComodule(std::vector<int> v_degrees, CoalgebraPtr c) : v_degrees_(std::move(v_degrees)), c_(std::move(c)) {}
    int deg(const Key& k) const override;
    TVec coaction(const Key& k) const override;
    Vec d(const Key& k) const override;
    bool has_differential() const override { return c_->has_differential(); }
    std::vector<Key> basis(int bound) const override;
    const Coalgebra& coalgebra() const override { return *c_; }
    using Comodule::coaction;
    using Comodule::d;

    static Key make(int v, const Key& c);
    int v_degree(int v) const { return v_degrees_.at(v); }
    int v_dim() const { return static_cast<int>(v_degrees_.size()); }
    // pr = id ⊗ ε, with values on keys [v].
    Vec project(const Key& k) const;

private:
    std::vector<int> v_degrees_;
    CoalgebraPtr c_;
};

// Ψ_f = (f ⊗ id)∘(id ⊗ Δ) for f : V ⊗ C → V with values on keys [v].
KeyMap cogenerator_lift(const FreeComodule& m, const KeyMap& f);
// (Ψ ⊗ id)∘φ_M = φ_N∘Ψ on the basis window of M.
LawReport check_comodule_morphism(const Comodule& m, const Comodule& n, const KeyMap& psi, int bound);
// Axioms (i), (ii) and, with a differential, d² = 0 and the co-Leibniz rule.
LawReport check_comodule(const Comodule& m, int bound);

// A ⊗_τ C with d_τ = d_A⊗id + id⊗d_C − (μ⊗id)(id⊗τ⊗id)(id⊗Δ). Keys are
// [|a|, a..., c...]. The constructor checks the Maurer–Cartan equation on the
// basis window of C and throws ContractError when it fails.
class TwistedTensor : public Comodule {
public:
    TwistedTensor(AlgebraPtr a, CoalgebraPtr c, KeyMap tau, int bound);
    int deg(const Key& k) const override;
    TVec coaction(const Key& k) const override;
    Vec d(const Key& k) const override;
    bool has_differential() const override { return true; }
    std::vector<Key> basis(int bound) const override;
    const Coalgebra& coalgebra() const override { return *c_; }
    using Comodule::coaction;
    using Comodule::d;

    static Key make(const Key& a, const Key& c);
    static std::pair<Key, Key> split(const Key& k);

private:
    AlgebraPtr a_;
    CoalgebraPtr c_;
    KeyMap tau_;
};

// Left action of the convolution algebra Hom(C, k) on a comodule:
// ρ(f ⊗ m) = μ∘(id ⊗ f)∘φ(m). Functionals take values on the key [].
Vec comodule_action(const Comodule& m, const KeyMap& f, const Key& x);
Vec comodule_action(const Comodule& m, const KeyMap& f, const Vec& x);
// The functional dual to a basis key of C.
KeyMap dual_functional(const Coalgebra& c, const Key& k);
// Associativity, unit and Leibniz laws of the induced module on the window,
// for all dual basis functionals of C up to the bound.
LawReport check_module_translation(const Comodule& m, int bound);

// Dimensions of the degree slice of Hom(M, N) on the basis windows cut out by
// the comodule-morphism equations, by the module-morphism equations, and by both.
struct MorphismSlice {
    int comodule = 0, module = 0, both = 0;
};
MorphismSlice morphism_slice(const Comodule& m, const Comodule& n, int bound, int degree);

// T(A[1]) over a finite basis of A; letter i stands for ↓a_i and has degree |a_i| − 1.
class ShiftedTensor {
public:
    ShiftedTensor(AlgebraPtr a, int bound);
    const std::shared_ptr<TensorCoalgebra>& coalgebra() const { return t_; }
    const Algebra& algebra() const { return *a_; }
    const std::vector<Key>& keys() const { return keys_; }
    Key letters(const Word& w) const;
    Word word(const Key& letters) const;
    // ↓ on values: an A-vector written on single-letter keys.
    Vec down(const Vec& v) const;
    Vec up(const Vec& v) const;
    // (−1)^{Σ_i (p−i)|a_i|}.
    int decalage_sign(const Word& w) const;
    // dec(f) : A[1]^{⊗p} → A for f of bidegree (p, r), of degree p + r.
    KeyMap dec(const Cochain& f, int p, int r) const;
    // ↓∘g for g with values in A.
    KeyMap shifted(const KeyMap& g) const;
    // m = m₁ + m₂ with m₁ = ↓∘dec(d_A) and m₂ = ↓∘dec(μ_A).
    KeyMap m() const;

private:
    AlgebraPtr a_;
    std::vector<Key> keys_;
    std::map<Key, int> index_;
    std::shared_ptr<TensorCoalgebra> t_;
};

// Seeded homogeneous map from the key set of a coalgebra or comodule into the
// span of target keys, where degrees are given by the two degree functions.
KeyMap random_keymap(const std::function<int(const Key&)>& source_degree, const std::vector<Key>& targets,
                     const std::function<int(const Key&)>& target_degree, int degree, std::uint64_t seed);

}  // namespace hk
