#pragma once

#include "hochkit/core.hpp"

#include <memory>

namespace hk {

// A graded algebra presented on canonical monomial keys.
class Algebra {
public:
    virtual ~Algebra() = default;
    virtual int deg(const Key& k) const = 0;
    virtual Vec mul(const Key& a, const Key& b) const = 0;
    virtual Vec d(const Key&) const { return {}; }
    virtual Vec unit() const = 0;
    // Basis keys of the finite window with size parameter bound.
    virtual std::vector<Key> basis(int bound) const = 0;
    virtual std::string show(const Key& k) const { return key_string(k); }

    Vec mul(const Vec& a, const Vec& b) const;
    Vec mul(const Vec& a, const Key& b) const { return mul(a, Vec(b)); }
    Vec d(const Vec& v) const;
    // Degree of a homogeneous nonzero vector; throws on mixed degrees.
    int deg(const Vec& v) const;
};
using AlgebraPtr = std::shared_ptr<const Algebra>;

// A graded A-B-bimodule with a differential, presented on keys.
class Bimodule {
public:
    virtual ~Bimodule() = default;
    virtual int deg(const Key& k) const = 0;
    virtual Vec left(const Key& a, const Key& m) const = 0;
    virtual Vec right(const Key& m, const Key& b) const = 0;
    virtual Vec d(const Key&) const { return {}; }
    virtual std::vector<Key> basis(int bound) const = 0;

    Vec left(const Vec& a, const Vec& m) const;
    Vec right(const Vec& m, const Vec& b) const;
    Vec d(const Vec& v) const;
};
using BimodulePtr = std::shared_ptr<const Bimodule>;

// The ground field in degree 0, with the single key [].
class GroundField : public Algebra {
public:
    int deg(const Key&) const override { return 0; }
    Vec mul(const Key&, const Key&) const override { return Vec(Key{}); }
    Vec unit() const override { return Vec(Key{}); }
    std::vector<Key> basis(int) const override { return {Key{}}; }
};

// k[x]/(x^2) with x of the given degree and zero differential; keys [0] = 1 and [1] = x.
class DualNumbers : public Algebra {
public:
    explicit DualNumbers(int x_degree) : xdeg_(x_degree) {}
    int deg(const Key& k) const override { return k.at(0) == 0 ? 0 : xdeg_; }
    Vec mul(const Key& a, const Key& b) const override;
    Vec unit() const override { return Vec(Key{0}); }
    std::vector<Key> basis(int) const override { return {Key{0}, Key{1}}; }
    std::string show(const Key& k) const override { return k.at(0) == 0 ? "1" : "x"; }

private:
    int xdeg_;
};

class AlgebraAsBimodule : public Bimodule {
public:
    explicit AlgebraAsBimodule(AlgebraPtr a) : a_(std::move(a)) {}
    int deg(const Key& k) const override { return a_->deg(k); }
    Vec left(const Key& a, const Key& m) const override { return a_->mul(a, m); }
    Vec right(const Key& m, const Key& b) const override { return a_->mul(m, b); }
    Vec d(const Key& k) const override { return a_->d(k); }
    std::vector<Key> basis(int bound) const override { return a_->basis(bound); }

private:
    AlgebraPtr a_;
};

// The semidirect product A ⋉ X ⋊ B. Keys carry a tag 0, 1 or 2 for A, X, B
// followed by the key of the summand.
class Semidirect : public Algebra {
public:
    Semidirect(AlgebraPtr a, BimodulePtr x, AlgebraPtr b) : a_(std::move(a)), x_(std::move(x)), b_(std::move(b)) {}
    int deg(const Key& k) const override;
    Vec mul(const Key& p, const Key& q) const override;
    Vec d(const Key& k) const override;
    Vec unit() const override;
    std::vector<Key> basis(int bound) const override;

    static Key tag(int t, const Key& k);
    static Vec tag(int t, const Vec& v);
    static int tag_of(const Key& k) { return k.at(0); }
    static Key untag(const Key& k) { return Key(k.begin() + 1, k.end()); }
    // Component of a tagged vector with the given tag, untagged.
    static Vec part(const Vec& v, int t);

    const Algebra& a() const { return *a_; }
    const Bimodule& x() const { return *x_; }
    const Algebra& b() const { return *b_; }

private:
    AlgebraPtr a_;
    BimodulePtr x_;
    AlgebraPtr b_;
};

}  // namespace hk
