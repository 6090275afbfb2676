#include "hochkit/coalgebra.hpp"

#include <algorithm>

namespace hk {

namespace {

Key concat(const Key& a, const Key& b) {
    Key out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Key slice(const Key& k, std::size_t from, std::size_t to) {
    return Key(k.begin() + static_cast<long>(from), k.begin() + static_cast<long>(to));
}

// Encodes a labelled equation slot as a single key.
Key slot_key(int tag, const Key& k, const Word& w) {
    Key out{tag, static_cast<int>(k.size())};
    out.insert(out.end(), k.begin(), k.end());
    for (const auto& part : w) {
        out.push_back(static_cast<int>(part.size()));
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

const GroundField& ground() {
    static const GroundField k;
    return k;
}

TVec tensor_left(const Vec& v, const Key& right) {
    TVec out;
    for (const auto& [k, c] : v) out.add(Word{k, right}, c);
    return out;
}

TVec tensor_right(const Key& left, const Vec& v) {
    TVec out;
    for (const auto& [k, c] : v) out.add(Word{left, k}, c);
    return out;
}

}  // namespace

Vec KeyMap::apply(const Vec& v) const {
    Vec out;
    for (const auto& [k, c] : v) out.add((*this)(k), c);
    return out;
}

KeyMap KeyMap::zero(int degree) { return {degree, [](const Key&) { return Vec(); }}; }

KeyMap operator+(const KeyMap& f, const KeyMap& g) {
    if (f.degree != g.degree) throw ContractError("sum of maps of degrees " + std::to_string(f.degree) + " and " +
                                                  std::to_string(g.degree));
    return {f.degree, [f, g](const Key& k) { return f(k) + g(k); }};
}

KeyMap operator-(const KeyMap& f, const KeyMap& g) {
    if (f.degree != g.degree) throw ContractError("difference of maps of degrees " + std::to_string(f.degree) +
                                                  " and " + std::to_string(g.degree));
    return {f.degree, [f, g](const Key& k) { return f(k) - g(k); }};
}

void LawReport::fail(std::string what) {
    if (failures.size() < 20) failures.push_back(std::move(what));
}

TVec Coalgebra::coproduct(const Vec& v) const {
    TVec out;
    for (const auto& [k, c] : v) out.add(coproduct(k), c);
    return out;
}

Vec Coalgebra::d(const Vec& v) const {
    Vec out;
    for (const auto& [k, c] : v) out.add(d(k), c);
    return out;
}

int Coalgebra::tensor_degree(const Word& w) const {
    int s = 0;
    for (const auto& k : w) s += deg(k);
    return s;
}

int SymCoalgebra::deg(const Key& k) const {
    int s = 0;
    for (int l : k) s += degrees_.at(l);
    return s;
}

TVec SymCoalgebra::coproduct(const Key& x) const {
    TVec out;
    int n = static_cast<int>(x.size());
    std::vector<int> degrees(n);
    for (int i = 0; i < n; ++i) degrees[i] = degrees_.at(x[i]);
    for (int k = 0; k <= n; ++k) {
        for (const auto& idx : subsets_of_size(n, k)) {
            std::vector<int> perm = idx;
            std::vector<bool> used(n, false);
            Key left, right;
            for (int i : idx) {
                used[i] = true;
                left.push_back(x[i]);
            }
            for (int i = 0; i < n; ++i)
                if (!used[i]) {
                    perm.push_back(i);
                    right.push_back(x[i]);
                }
            out.add(Word{left, right}, koszul_permutation_sign(perm, degrees));
        }
    }
    return out;
}

std::vector<Key> SymCoalgebra::basis(int bound) const {
    int n = letters();
    if (bound < 0) {
        for (int d : degrees_)
            if (d % 2 == 0) throw ContractError("S(V) with an even letter has no finite basis; pass a length bound");
        bound = n;
    }
    std::vector<Key> out{Key{}};
    std::vector<Key> frontier{Key{}};
    for (int len = 1; len <= bound; ++len) {
        std::vector<Key> next;
        for (const auto& k : frontier) {
            int start = k.empty() ? 0 : k.back();
            for (int l = start; l < n; ++l) {
                if (!k.empty() && l == k.back() && degrees_[l] % 2 != 0) continue;
                Key e = k;
                e.push_back(l);
                next.push_back(e);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

Vec SymCoalgebra::mul(const Key& a, const Key& b) const {
    Key w = concat(a, b);
    int s = koszul_sort(w, [this](int l) { return degrees_.at(l) % 2 != 0; });
    if (s == 0) return {};
    return Vec(w, s);
}

Vec SymCoalgebra::mul(const Vec& a, const Vec& b) const {
    Vec out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out.add(mul(x, y), cx * cy);
    return out;
}

void SymCoalgebra::set_differential(const KeyMap& q) {
    if (q.degree != 1) throw ContractError("a differential has degree 1, got " + std::to_string(q.degree));
    differential_ = coderivation_lift(*this, q).fn;
}

std::shared_ptr<SymCoalgebra> lie_chains(const LieAlgebra& g) {
    auto c = std::make_shared<SymCoalgebra>(std::vector<int>(g.dim(), -1));
    c->set_differential({1, [g](const Key& x) {
                             Vec out;
                             if (x.size() != 2) return out;
                             for (const auto& [k, v] : g.bracket(x[0], x[1])) out.add(Key{k}, -v);
                             return out;
                         }});
    return c;
}

int TensorCoalgebra::deg(const Key& k) const {
    int s = 0;
    for (int l : k) s += degrees_.at(l);
    return s;
}

TVec TensorCoalgebra::coproduct(const Key& x) const {
    TVec out;
    for (std::size_t i = 0; i <= x.size(); ++i) out.add(Word{slice(x, 0, i), slice(x, i, x.size())}, 1);
    return out;
}

std::vector<Key> TensorCoalgebra::basis(int bound) const {
    if (bound < 0) throw ContractError("T(V) has no finite basis; pass a length bound");
    std::vector<Key> out{Key{}};
    std::vector<Key> frontier{Key{}};
    for (int len = 1; len <= bound; ++len) {
        std::vector<Key> next;
        for (const auto& k : frontier)
            for (int l = 0; l < letters(); ++l) {
                Key e = k;
                e.push_back(l);
                next.push_back(e);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

void TensorCoalgebra::set_differential(const KeyMap& q) {
    if (q.degree != 1) throw ContractError("a differential has degree 1, got " + std::to_string(q.degree));
    differential_ = coderivation_lift(*this, q).fn;
}

KeyMap coderivation_lift(const Coalgebra& c, const KeyMap& q) {
    if (const auto* s = dynamic_cast<const SymCoalgebra*>(&c)) {
        return {q.degree, [s, q](const Key& x) {
                    Vec out;
                    for (const auto& [w, coef] : s->SymCoalgebra::coproduct(x)) {
                        Vec qa = q(w[0]);
                        if (!qa.is_zero()) out.add(s->mul(qa, Vec(w[1])), coef);
                    }
                    return out;
                }};
    }
    if (const auto* t = dynamic_cast<const TensorCoalgebra*>(&c)) {
        return {q.degree, [t, q](const Key& x) {
                    Vec out;
                    int prefix = 0;
                    for (std::size_t i = 0; i <= x.size(); ++i) {
                        Key head = slice(x, 0, i);
                        int sign = sign_of(static_cast<long>(q.degree) * prefix);
                        for (std::size_t j = i; j <= x.size(); ++j) {
                            Key tail = slice(x, j, x.size());
                            for (const auto& [v, cv] : q(slice(x, i, j))) out.add(concat(concat(head, v), tail), cv * sign);
                        }
                        if (i < x.size()) prefix += t->letter_degree(x[i]);
                    }
                    return out;
                }};
    }
    throw ContractError("coderivation lift needs a symmetric or tensor coalgebra");
}

Vec cogenerator_part(const Vec& v) {
    Vec out;
    for (const auto& [k, c] : v)
        if (k.size() == 1) out.add(k, c);
    return out;
}

LawReport check_coderivation(const Coalgebra& c, const KeyMap& q, int bound) {
    LawReport r;
    for (const auto& x : c.basis(bound)) {
        ++r.checked;
        TVec lhs = c.coproduct(q(x));
        TVec rhs;
        for (const auto& [w, coef] : c.coproduct(x)) {
            rhs.add(tensor_right(w[0], q(w[1])), coef * sign_of(static_cast<long>(q.degree) * c.deg(w[0])));
            rhs.add(tensor_left(q(w[0]), w[1]), coef);
        }
        if (lhs != rhs) r.fail("coderivation law fails at " + key_string(x));
    }
    return r;
}

LawReport check_coalgebra(const Coalgebra& c, int bound) {
    LawReport r;
    for (const auto& x : c.basis(bound)) {
        ++r.checked;
        TVec delta = c.coproduct(x);
        TVec left, right;
        Vec counit_left, counit_right;
        for (const auto& [w, coef] : delta) {
            for (const auto& [w2, c2] : c.coproduct(w[0])) left.add(Word{w2[0], w2[1], w[1]}, coef * c2);
            for (const auto& [w2, c2] : c.coproduct(w[1])) right.add(Word{w[0], w2[0], w2[1]}, coef * c2);
            counit_left.add(w[1], coef * c.counit(w[0]));
            counit_right.add(w[0], coef * c.counit(w[1]));
        }
        if (left != right) r.fail("coassociativity fails at " + key_string(x));
        if (counit_left != Vec(x) || counit_right != Vec(x)) r.fail("counit law fails at " + key_string(x));
        if (c.cocommutative()) {
            TVec twisted;
            for (const auto& [w, coef] : delta)
                twisted.add(Word{w[1], w[0]}, coef * sign_of(static_cast<long>(c.deg(w[0])) * c.deg(w[1])));
            if (twisted != delta) r.fail("cocommutativity fails at " + key_string(x));
        }
        if (c.has_differential() && !c.d(c.d(x)).is_zero()) r.fail("d² ≠ 0 at " + key_string(x));
    }
    if (c.has_differential()) {
        LawReport law = check_coderivation(c, {1, [&c](const Key& k) { return c.d(k); }}, bound);
        for (auto& f : law.failures) r.fail("differential: " + f);
    }
    return r;
}

KeyMap coderivation_bracket(const Coalgebra& c, const KeyMap& f, const KeyMap& g) {
    KeyMap lf = coderivation_lift(c, f), lg = coderivation_lift(c, g);
    int s = sign_of(static_cast<long>(f.degree) * g.degree);
    return {f.degree + g.degree, [lf, lg, f, g, s](const Key& x) {
                return cogenerator_part(f.apply(lg(x)) - g.apply(lf(x)).scaled(s));
            }};
}

KeyMap convolution(const Coalgebra& c, const Algebra& a, const KeyMap& f, const KeyMap& g) {
    return {f.degree + g.degree, [&c, &a, f, g](const Key& x) {
                Vec out;
                for (const auto& [w, coef] : c.coproduct(x)) {
                    Vec fa = f(w[0]);
                    if (fa.is_zero()) continue;
                    Vec gb = g(w[1]);
                    if (gb.is_zero()) continue;
                    out.add(a.mul(fa, gb), coef * sign_of(static_cast<long>(g.degree) * c.deg(w[0])));
                }
                return out;
            }};
}

KeyMap convolution_unit(const Coalgebra& c, const Algebra& a) {
    return {0, [&c, &a](const Key& x) { return a.unit().scaled(c.counit(x)); }};
}

KeyMap convolution_differential(const Coalgebra& c, const Algebra& a, const KeyMap& f) {
    return {f.degree + 1, [&c, &a, f](const Key& x) {
                return a.d(f(x)) - f.apply(c.d(x)).scaled(sign_of(f.degree));
            }};
}

KeyMap mc_defect(const Coalgebra& c, const Algebra& a, const KeyMap& tau) {
    return convolution_differential(c, a, tau) + convolution(c, a, tau, tau);
}

KeyMap lie_twisting_cochain() {
    return {1, [](const Key& x) { return x.size() == 1 ? Vec(Key{x[0]}, -1) : Vec(); }};
}

Vec Comodule::d(const Vec& v) const {
    Vec out;
    for (const auto& [k, c] : v) out.add(d(k), c);
    return out;
}

TVec Comodule::coaction(const Vec& v) const {
    TVec out;
    for (const auto& [k, c] : v) out.add(coaction(k), c);
    return out;
}

Key FreeComodule::make(int v, const Key& c) {
    Key k{v};
    k.insert(k.end(), c.begin(), c.end());
    return k;
}

int FreeComodule::deg(const Key& k) const { return v_degrees_.at(k.at(0)) + c_->deg(slice(k, 1, k.size())); }

TVec FreeComodule::coaction(const Key& k) const {
    TVec out;
    for (const auto& [w, coef] : c_->coproduct(slice(k, 1, k.size()))) out.add(Word{make(k[0], w[0]), w[1]}, coef);
    return out;
}

Vec FreeComodule::d(const Key& k) const {
    Vec out;
    for (const auto& [c, coef] : c_->d(slice(k, 1, k.size()))) out.add(make(k[0], c), coef * sign_of(v_degrees_.at(k[0])));
    return out;
}

std::vector<Key> FreeComodule::basis(int bound) const {
    std::vector<Key> out;
    auto cs = c_->basis(bound);
    for (int v = 0; v < v_dim(); ++v)
        for (const auto& c : cs) out.push_back(make(v, c));
    return out;
}

Vec FreeComodule::project(const Key& k) const { return Vec(Key{k.at(0)}, c_->counit(slice(k, 1, k.size()))); }

KeyMap cogenerator_lift(const FreeComodule& m, const KeyMap& f) {
    return {f.degree, [&m, f](const Key& k) {
                Vec out;
                for (const auto& [w, coef] : m.coalgebra().coproduct(slice(k, 1, k.size())))
                    for (const auto& [v, cv] : f(FreeComodule::make(k[0], w[0])))
                        out.add(FreeComodule::make(v.at(0), w[1]), coef * cv);
                return out;
            }};
}

LawReport check_comodule_morphism(const Comodule& m, const Comodule& n, const KeyMap& psi, int bound) {
    LawReport r;
    for (const auto& k : m.basis(bound)) {
        ++r.checked;
        TVec lhs;
        for (const auto& [w, coef] : m.coaction(k)) lhs.add(tensor_left(psi(w[0]), w[1]), coef);
        if (lhs != n.coaction(psi(k))) r.fail("comodule morphism law fails at " + key_string(k));
    }
    return r;
}

LawReport check_comodule(const Comodule& m, int bound) {
    LawReport r;
    const Coalgebra& c = m.coalgebra();
    for (const auto& k : m.basis(bound)) {
        ++r.checked;
        TVec phi = m.coaction(k);
        TVec left, right;
        Vec counit;
        for (const auto& [w, coef] : phi) {
            for (const auto& [w2, c2] : m.coaction(w[0])) left.add(Word{w2[0], w2[1], w[1]}, coef * c2);
            for (const auto& [w2, c2] : c.coproduct(w[1])) right.add(Word{w[0], w2[0], w2[1]}, coef * c2);
            counit.add(w[0], coef * c.counit(w[1]));
        }
        if (left != right) r.fail("coaction axiom (i) fails at " + key_string(k));
        if (counit != Vec(k)) r.fail("coaction axiom (ii) fails at " + key_string(k));
        if (!m.has_differential()) continue;
        if (!m.d(m.d(k)).is_zero()) r.fail("d² ≠ 0 at " + key_string(k));
        TVec co_leibniz;
        for (const auto& [w, coef] : phi) {
            co_leibniz.add(tensor_left(m.d(w[0]), w[1]), coef);
            co_leibniz.add(tensor_right(w[0], c.d(w[1])), coef * sign_of(m.deg(w[0])));
        }
        if (m.coaction(m.d(k)) != co_leibniz) r.fail("co-Leibniz rule fails at " + key_string(k));
    }
    return r;
}

TwistedTensor::TwistedTensor(AlgebraPtr a, CoalgebraPtr c, KeyMap tau, int bound)
    : a_(std::move(a)), c_(std::move(c)), tau_(std::move(tau)) {
    if (tau_.degree != 1) throw ContractError("a twisting cochain has degree 1, got " + std::to_string(tau_.degree));
    KeyMap defect = mc_defect(*c_, *a_, tau_);
    for (const auto& x : c_->basis(bound))
        if (!defect(x).is_zero()) throw ContractError("τ fails the Maurer–Cartan equation at " + key_string(x));
}

Key TwistedTensor::make(const Key& a, const Key& c) {
    Key k{static_cast<int>(a.size())};
    k.insert(k.end(), a.begin(), a.end());
    k.insert(k.end(), c.begin(), c.end());
    return k;
}

std::pair<Key, Key> TwistedTensor::split(const Key& k) {
    auto n = static_cast<std::size_t>(k.at(0));
    return {slice(k, 1, n + 1), slice(k, n + 1, k.size())};
}

int TwistedTensor::deg(const Key& k) const {
    auto [a, c] = split(k);
    return a_->deg(a) + c_->deg(c);
}

TVec TwistedTensor::coaction(const Key& k) const {
    auto [a, c] = split(k);
    TVec out;
    for (const auto& [w, coef] : c_->coproduct(c)) out.add(Word{make(a, w[0]), w[1]}, coef);
    return out;
}

Vec TwistedTensor::d(const Key& k) const {
    auto [a, c] = split(k);
    Vec out;
    for (const auto& [x, cx] : a_->d(a)) out.add(make(x, c), cx);
    int da = a_->deg(a);
    for (const auto& [y, cy] : c_->d(c)) out.add(make(a, y), cy * sign_of(da));
    for (const auto& [w, coef] : c_->coproduct(c)) {
        Vec t = tau_(w[0]);
        if (t.is_zero()) continue;
        for (const auto& [x, cx] : a_->mul(Vec(a), t))
            out.add(make(x, w[1]), -coef * cx * sign_of(static_cast<long>(tau_.degree) * da));
    }
    return out;
}

std::vector<Key> TwistedTensor::basis(int bound) const {
    std::vector<Key> out;
    auto cs = c_->basis(bound);
    for (const auto& a : a_->basis(bound))
        for (const auto& c : cs) out.push_back(make(a, c));
    return out;
}

Vec comodule_action(const Comodule& m, const KeyMap& f, const Key& x) {
    Vec out;
    for (const auto& [w, coef] : m.coaction(x)) {
        Q v = f(w[1]).coeff(Key{});
        if (sgn(v) != 0) out.add(w[0], coef * v * sign_of(static_cast<long>(f.degree) * m.deg(w[0])));
    }
    return out;
}

Vec comodule_action(const Comodule& m, const KeyMap& f, const Vec& x) {
    Vec out;
    for (const auto& [k, c] : x) out.add(comodule_action(m, f, k), c);
    return out;
}

KeyMap dual_functional(const Coalgebra& c, const Key& k) {
    return {-c.deg(k), [k](const Key& x) { return x == k ? Vec(Key{}) : Vec(); }};
}

LawReport check_module_translation(const Comodule& m, int bound) {
    LawReport r;
    const Coalgebra& c = m.coalgebra();
    std::vector<KeyMap> fs;
    for (const auto& k : c.basis(bound)) fs.push_back(dual_functional(c, k));
    KeyMap unit = convolution_unit(c, ground());
    for (const auto& x : m.basis(bound)) {
        ++r.checked;
        if (comodule_action(m, unit, x) != Vec(x)) r.fail("unit law fails at " + key_string(x));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const KeyMap& f = fs[i];
            Vec fx = comodule_action(m, f, x);
            for (const auto& g : fs) {
                Vec lhs = comodule_action(m, convolution(c, ground(), f, g), x);
                if (lhs != comodule_action(m, f, comodule_action(m, g, x)))
                    r.fail("associativity of the action fails at " + key_string(x));
            }
            if (!m.has_differential()) continue;
            Vec rhs = comodule_action(m, convolution_differential(c, ground(), f), x) +
                      comodule_action(m, f, m.d(x)).scaled(sign_of(f.degree));
            if (m.d(fx) != rhs) r.fail("Leibniz rule of the action fails at " + key_string(x));
        }
    }
    return r;
}

MorphismSlice morphism_slice(const Comodule& m, const Comodule& n, int bound, int degree) {
    const Coalgebra& c = m.coalgebra();
    std::vector<Key> src = m.basis(bound), tgt = n.basis(bound);
    std::vector<std::pair<Key, Key>> unknowns;
    for (const auto& s : src)
        for (const auto& t : tgt)
            if (n.deg(t) - m.deg(s) == degree) unknowns.emplace_back(s, t);
    std::vector<KeyMap> fs;
    for (const auto& k : c.basis(bound)) fs.push_back(dual_functional(c, k));

    std::map<Key, TVec> phi_m;
    std::map<Key, std::vector<Vec>> rho_m;
    for (const auto& k : src) {
        phi_m[k] = m.coaction(k);
        for (const auto& f : fs) rho_m[k].push_back(comodule_action(m, f, k));
    }
    std::map<Key, int> rows;
    auto row = [&rows](const Key& k) { return rows.try_emplace(k, static_cast<int>(rows.size())).first->second; };
    ColumnMatrix como, mod, both;
    for (const auto& [s, t] : unknowns) {
        SparseRow col_c, col_m;
        for (const auto& k : src) {
            for (const auto& [w, coef] : phi_m[k])
                if (w[0] == s) col_c[row(slot_key(0, k, Word{t, w[1]}))] += coef;
            if (k == s)
                for (const auto& [w, coef] : n.coaction(t)) col_c[row(slot_key(0, k, w))] -= coef;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                Q v = rho_m[k][i].coeff(s);
                if (sgn(v) != 0) col_m[row(slot_key(1, k, Word{Key{static_cast<int>(i)}, t}))] += v;
                if (k == s)
                    for (const auto& [y, cy] : comodule_action(n, fs[i], t))
                        col_m[row(slot_key(1, k, Word{Key{static_cast<int>(i)}, y}))] -=
                            cy * sign_of(static_cast<long>(fs[i].degree) * degree);
            }
        }
        auto prune = [](SparseRow& r) { std::erase_if(r, [](const auto& e) { return sgn(e.second) == 0; }); };
        prune(col_c);
        prune(col_m);
        SparseRow col_b = col_c;
        for (const auto& [i, v] : col_m) col_b[i] = v;
        como.cols.push_back(col_c);
        mod.cols.push_back(col_m);
        both.cols.push_back(col_b);
    }
    como.rows = mod.rows = both.rows = static_cast<int>(rows.size());
    int u = static_cast<int>(unknowns.size());
    return {u - matrix_rank(como), u - matrix_rank(mod), u - matrix_rank(both)};
}

ShiftedTensor::ShiftedTensor(AlgebraPtr a, int bound) : a_(std::move(a)), keys_(a_->basis(bound)) {
    std::vector<int> degrees;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        index_[keys_[i]] = static_cast<int>(i);
        degrees.push_back(a_->deg(keys_[i]) - 1);
    }
    t_ = std::make_shared<TensorCoalgebra>(degrees);
}

Key ShiftedTensor::letters(const Word& w) const {
    Key out;
    for (const auto& k : w) out.push_back(index_.at(k));
    return out;
}

Word ShiftedTensor::word(const Key& letters) const {
    Word out;
    for (int l : letters) out.push_back(keys_.at(l));
    return out;
}

Vec ShiftedTensor::down(const Vec& v) const {
    Vec out;
    for (const auto& [k, c] : v) {
        auto it = index_.find(k);
        if (it == index_.end()) throw ContractError("value " + key_string(k) + " lies outside the basis window of A");
        out.add(Key{it->second}, c);
    }
    return out;
}

Vec ShiftedTensor::up(const Vec& v) const {
    Vec out;
    for (const auto& [k, c] : v) out.add(keys_.at(k.at(0)), c);
    return out;
}

int ShiftedTensor::decalage_sign(const Word& w) const {
    long e = 0;
    long p = static_cast<long>(w.size());
    for (long i = 0; i < p; ++i) e += (p - 1 - i) * a_->deg(w[i]);
    return sign_of(e);
}

KeyMap ShiftedTensor::dec(const Cochain& f, int p, int r) const {
    return {p + r, [this, f, p](const Key& l) {
                if (static_cast<int>(l.size()) != p) return Vec();
                Word w = word(l);
                return f(w).scaled(decalage_sign(w));
            }};
}

KeyMap ShiftedTensor::shifted(const KeyMap& g) const {
    return {g.degree - 1, [this, g](const Key& l) { return down(g(l)); }};
}

KeyMap ShiftedTensor::m() const {
    return {1, [this](const Key& l) {
                if (l.size() == 1) return down(a_->d(Vec(keys_.at(l[0]))));
                if (l.size() == 2) {
                    const Key& a1 = keys_.at(l[0]);
                    return down(a_->mul(a1, keys_.at(l[1])).scaled(sign_of(a_->deg(a1))));
                }
                return Vec();
            }};
}

KeyMap random_keymap(const std::function<int(const Key&)>& source_degree, const std::vector<Key>& targets,
                     const std::function<int(const Key&)>& target_degree, int degree, std::uint64_t seed) {
    auto by_degree = std::make_shared<std::map<int, std::vector<Key>>>();
    for (const auto& t : targets) (*by_degree)[target_degree(t)].push_back(t);
    return {degree, [source_degree, by_degree, degree, seed](const Key& k) {
                Vec out;
                auto it = by_degree->find(source_degree(k) + degree);
                if (it == by_degree->end()) return out;
                Rng rng(hash_key(seed, k));
                for (const auto& t : it->second)
                    if (rng.chance(1, 2)) out.add(t, rng.coeff());
                return out;
            }};
}

}  // namespace hk
