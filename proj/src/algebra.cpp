#include "hochkit/algebra.hpp"

namespace hk {

Vec Algebra::mul(const Vec& a, const Vec& b) const {
    Vec out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.add(mul(ka, kb), ca * cb);
    return out;
}

Vec Algebra::d(const Vec& v) const {
    Vec out;
    for (const auto& [k, c] : v) out.add(d(k), c);
    return out;
}

int Algebra::deg(const Vec& v) const {
    if (v.is_zero()) throw ContractError("degree of the zero vector");
    int dg = deg(v.begin()->first);
    for (const auto& [k, c] : v)
        if (deg(k) != dg) throw ContractError("inhomogeneous vector");
    return dg;
}

Vec Bimodule::left(const Vec& a, const Vec& m) const {
    Vec out;
    for (const auto& [ka, ca] : a)
        for (const auto& [km, cm] : m) out.add(left(ka, km), ca * cm);
    return out;
}

Vec Bimodule::right(const Vec& m, const Vec& b) const {
    Vec out;
    for (const auto& [km, cm] : m)
        for (const auto& [kb, cb] : b) out.add(right(km, kb), cm * cb);
    return out;
}

Vec Bimodule::d(const Vec& v) const {
    Vec out;
    for (const auto& [k, c] : v) out.add(d(k), c);
    return out;
}

Vec DualNumbers::mul(const Key& a, const Key& b) const {
    int n = a.at(0) + b.at(0);
    if (n > 1) return {};
    return Vec(Key{n});
}

Key Semidirect::tag(int t, const Key& k) {
    Key out;
    out.reserve(k.size() + 1);
    out.push_back(t);
    out.insert(out.end(), k.begin(), k.end());
    return out;
}

Vec Semidirect::tag(int t, const Vec& v) {
    Vec out;
    for (const auto& [k, c] : v) out.add(tag(t, k), c);
    return out;
}

Vec Semidirect::part(const Vec& v, int t) {
    Vec out;
    for (const auto& [k, c] : v)
        if (tag_of(k) == t) out.add(untag(k), c);
    return out;
}

int Semidirect::deg(const Key& k) const {
    switch (tag_of(k)) {
        case 0: return a_->deg(untag(k));
        case 1: return x_->deg(untag(k));
        default: return b_->deg(untag(k));
    }
}

Vec Semidirect::mul(const Key& p, const Key& q) const {
    int tp = tag_of(p), tq = tag_of(q);
    Key up = untag(p), uq = untag(q);
    if (tp == 0 && tq == 0) return tag(0, a_->mul(up, uq));
    if (tp == 0 && tq == 1) return tag(1, x_->left(up, uq));
    if (tp == 1 && tq == 2) return tag(1, x_->right(up, uq));
    if (tp == 2 && tq == 2) return tag(2, b_->mul(up, uq));
    return {};
}

Vec Semidirect::d(const Key& k) const {
    switch (tag_of(k)) {
        case 0: return tag(0, a_->d(untag(k)));
        case 1: return tag(1, x_->d(untag(k)));
        default: return tag(2, b_->d(untag(k)));
    }
}

Vec Semidirect::unit() const { return tag(0, a_->unit()) + tag(2, b_->unit()); }

std::vector<Key> Semidirect::basis(int bound) const {
    std::vector<Key> out;
    for (const auto& k : a_->basis(bound)) out.push_back(tag(0, k));
    for (const auto& k : x_->basis(bound)) out.push_back(tag(1, k));
    for (const auto& k : b_->basis(bound)) out.push_back(tag(2, k));
    return out;
}

}  // namespace hk
