#pragma once

#include "hochkit/hochschild.hpp"

namespace hk {

// A cochain in Hoch(A, X, B) = ⊕ Hom(A^{⊗p} ⊗ X ⊗ B^{⊗q}, X).
class XCochain {
public:
    using Fn = std::function<Vec(const Word&, const Key&, const Word&)>;
    XCochain() : fn_([](const Word&, const Key&, const Word&) { return Vec(); }) {}
    explicit XCochain(Fn fn) : fn_(std::move(fn)) {}
    Vec operator()(const Word& a, const Key& x, const Word& b) const { return fn_(a, x, b); }

private:
    Fn fn_;
};

XCochain operator+(const XCochain& f, const XCochain& g);
XCochain operator-(const XCochain& f, const XCochain& g);
XCochain scale(const XCochain& f, const Q& c);

struct TrioCochain {
    Cochain a;
    XCochain x;
    Cochain b;
};

// A Hochschild cochain with values in Hom(X, X), uncurried: F(w, x) = F(w)(x).
using OpCochain = std::function<Vec(const Word&, const Key&)>;

// The test window of a trio: basis keys of A, X, B used to enumerate inputs.
struct TrioWindow {
    std::vector<Key> a, x, b;
    int max_p = 2, max_q = 2;
};

class TrioComplex {
public:
    TrioComplex(AlgebraPtr a, BimodulePtr x, AlgebraPtr b);

    const Algebra& a() const { return *a_; }
    const Bimodule& x() const { return *x_; }
    const Algebra& b() const { return *b_; }
    const Semidirect& ambient() const { return *s_; }
    std::shared_ptr<const Semidirect> ambient_ptr() const { return s_; }

    // Internal degree r of an output key on the input (a; x; b).
    int internal_degree(const Key& out, const Word& a, const Key& x, const Word& b) const;

    XCochain d_ax(const Cochain& fa) const;
    XCochain d_xb(const Cochain& fb) const;
    XCochain d_left(const XCochain& f) const;
    XCochain d_right(const XCochain& f) const;
    XCochain partial_x(const XCochain& f) const;
    // d_H^X + ∂_X.
    XCochain d_x(const XCochain& f) const;
    TrioCochain differential(const TrioCochain& t) const;

    Cochain embed(const TrioCochain& t) const;
    TrioCochain project(const Cochain& f) const;
    // Products computed in the ambient algebra and projected back.
    TrioCochain cup(const TrioCochain& f, const TrioCochain& g) const;
    TrioCochain circ(const TrioCochain& f, const TrioCochain& g, int i) const;
    TrioCochain bracket(const TrioCochain& f, const TrioCochain& g) const;

    static TrioCochain iota_a(const Cochain& fa) { return {fa, XCochain(), Cochain()}; }
    static TrioCochain iota_b(const Cochain& fb) { return {Cochain(), XCochain(), fb}; }

    // Hoch(A, Hom(X,X)) with (a·φ)(x) = aφ(x), (φ·a)(x) = φ(ax) and d = [d_X, −].
    OpCochain end_total_left(const OpCochain& f) const;
    // Hoch(B, Hom_A(X,X)) with (b·φ)(x) = ±φ(xb), (φ·b)(x) = ±φ(x)b and d = [d_X, −].
    OpCochain end_total_right(const OpCochain& f) const;
    // Φ(F)(a; x) = (-1)^r F(a)(x).
    XCochain phi(const OpCochain& f) const;
    // Ψ(f)(x; b) = (-1)^{q+r-1}(-1)^{|x|Σ|b|} f(b)(x).
    XCochain psi(const OpCochain& f) const;
    // ρ_A* : Hoch(A) → Hoch(A, Hom(X,X)), post-composition with left multiplication.
    OpCochain rho_a_star(const Cochain& fa) const;

    // Words of the ambient algebra spanned by the window, of length ≤ max_len.
    std::vector<Word> ambient_words(const TrioWindow& w, int max_len, int per_length, std::uint64_t seed) const;

private:
    AlgebraPtr a_;
    BimodulePtr x_;
    AlgebraPtr b_;
    std::shared_ptr<Semidirect> s_;
};

// Deterministic random X-cochain of internal degree r supported on the given (p, q) shapes.
XCochain random_xcochain(const TrioComplex& t, const ValueWindow& values, const std::vector<std::pair<int, int>>& shapes,
                         int r, std::uint64_t seed);
// Deterministic random operator cochain F(w)(x) of internal degree r on the given arities.
OpCochain random_opcochain(const Algebra& a, const Bimodule& x, const ValueWindow& values, const std::vector<int>& arities,
                           int r, std::uint64_t seed);

struct TrioDifference {
    std::string where;
};
// Compares two trio cochains on all inputs of the window (sampled when large).
std::optional<TrioDifference> trio_difference(const TrioCochain& f, const TrioCochain& g, const TrioWindow& w,
                                              int per_shape, std::uint64_t seed);
std::optional<TrioDifference> x_difference(const XCochain& f, const XCochain& g, const TrioWindow& w, int per_shape,
                                           std::uint64_t seed);

// Mapping cone of φ : C → D with d(c, d) = (-d_C c, φ(c) + d_D d).
template <class C, class D>
struct ConePair {
    C c;
    D d;
};

}  // namespace hk
