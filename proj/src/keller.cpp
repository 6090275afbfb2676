#include "hochkit/keller.hpp"

#include <algorithm>
#include <tuple>

namespace hk {

Key KellerX::make(const Key& u, const Key& x) {
    Key k{static_cast<int>(u.size())};
    k.insert(k.end(), u.begin(), u.end());
    k.insert(k.end(), x.begin(), x.end());
    return k;
}

std::pair<Key, Key> KellerX::split(const Key& k) {
    int n = k.at(0);
    return {Key(k.begin() + 1, k.begin() + 1 + n), Key(k.begin() + 1 + n, k.end())};
}

Vec KellerX::tensor(const Vec& u, const Vec& x) {
    Vec out;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : x) out.add(make(a, b), ca * cb);
    return out;
}

int KellerX::deg(const Key& k) const { return -static_cast<int>(split(k).second.size()); }

Vec KellerX::left(const Key& a, const Key& m) const {
    auto [u, x] = split(m);
    return tensor(ug_->mul(a, u), Vec(x));
}

Vec KellerX::right(const Key& m, const Key& b) const {
    auto [u, x] = split(m);
    return tensor(Vec(u), sym_->contract(x, b));
}

Vec KellerX::d(const Key& m) const {
    auto [u, x] = split(m);
    Vec out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Key rest = x;
        rest.erase(rest.begin() + static_cast<long>(i));
        out.add(tensor(ug_->mul(u, Key{x[i]}), Vec(rest)), Q(sign_of(static_cast<int>(i))));
    }
    out.add(tensor(Vec(u), sym_->boundary(x)));
    return out;
}

std::vector<Key> KellerX::basis(int bound) const {
    std::vector<Key> out;
    for (const auto& u : ug_->basis(bound))
        for (const auto& x : sym_->basis(-1)) out.push_back(make(u, x));
    return out;
}

TrioWindow KellerTriple::window(int pbw, int max_p, int max_q) const {
    TrioWindow w;
    w.a = ug->basis(pbw);
    w.x = x->basis(pbw);
    w.b = dual->basis(-1);
    w.max_p = max_p;
    w.max_q = max_q;
    return w;
}

KellerTriple build_triple(const LieAlgebra& g) {
    auto report = g.validate();
    if (!report.ok) throw ContractError("Lie algebra " + g.name() + " is invalid: " + report.describe());
    KellerTriple t{g, std::make_shared<Enveloping>(g), std::make_shared<OddSym>(g), std::make_shared<DualOdd>(g),
                   nullptr, nullptr};
    t.x = std::make_shared<KellerX>(t.ug, t.sym, t.dual);
    t.trio = std::make_shared<TrioComplex>(t.ug, t.x, t.dual);
    return t;
}

Vec apply_op(const XOperator& f, const Vec& v) { return apply_linear(v, f); }

XOperator rho_a(const KellerTriple& t, const Vec& v) {
    auto x = t.x;
    return [x, v](const Key& m) { return x->left(v, Vec(m)); };
}

XOperator rho_b(const KellerTriple& t, const Vec& b) {
    auto x = t.x;
    int db = b.is_zero() ? 0 : t.dual->deg(b);
    return [x, b, db](const Key& m) { return x->right(Vec(m), b).scaled(Q(sign_of(x->deg(m) * db))); };
}

XOperator partial_x(const KellerTriple& t, const XOperator& f, int deg) {
    auto x = t.x;
    return [x, f, deg](const Key& m) {
        Vec out = x->d(f(m));
        out.add(apply_op(f, x->d(m)), Q(-sign_of(deg)));
        return out;
    };
}

XOperator compose_ops(const XOperator& f, const XOperator& g) {
    return [f, g](const Key& m) { return apply_op(f, g(m)); };
}

Vec epsilon_star(const KellerTriple& t, const XOperator& f) {
    Vec out;
    const Key one = KellerX::make({}, {});
    for (const auto& xi : t.dual->basis(-1)) {
        Key x = DualOdd::dual_of(xi);
        Q psi = f(KellerX::make({}, x)).coeff(one);
        if (psi == 0) continue;
        int k = static_cast<int>(x.size());
        Q lambda = t.sym->contract(x, xi).coeff(Key{}) * sign_of(k * k);
        out.add(xi, psi / lambda);
    }
    return out;
}

TopFormReport top_form_check(int d) {
    TopFormReport rep;
    LieAlgebra g = LieAlgebra::abelian(d);
    OddSym sym(g);
    DualOdd dual(g);
    Vec omega(sym.top()), tau(dual.top());
    for (const auto& x : sym.basis(-1)) {
        int dx = sym.deg(x);
        Vec lhs = sym.contract(omega, dual.contract(tau, Vec(x)));
        ++rep.checked;
        if (lhs != Vec(x).scaled(Q(sign_of(d - dx))))
            rep.failures.push_back("identity (i) at x = " + key_string(x));
        for (const auto& b : dual.basis(-1)) {
            Vec left = dual.contract(tau, sym.contract(Vec(x), Vec(b)));
            Vec right = dual.mul(dual.contract(tau, Vec(x)), Vec(b)).scaled(Q(sign_of(dual.deg(b))));
            ++rep.checked;
            if (left != right)
                rep.failures.push_back("identity (ii) at x = " + key_string(x) + ", b = " + key_string(b));
        }
    }
    return rep;
}

XCochain h_right(const KellerTriple& t, const XCochain& f) {
    auto x = t.x;
    auto dual = t.dual;
    Key omega = t.sym->top();
    Vec tau(dual->top());
    int d = t.dim();
    return XCochain([x, dual, omega, tau, d, f](const Word& a, const Key& m, const Word& b) {
        Vec out;
        auto [u, xs] = KellerX::split(m);
        int q = static_cast<int>(b.size());
        int in_deg = x->deg(m) + word_degree(*dual, b);
        Key um = KellerX::make(u, omega);
        for (const auto& [xi, cx] : dual->contract(tau, Vec(xs))) {
            Word bw{xi};
            bw.insert(bw.end(), b.begin(), b.end());
            for (const auto& [o, c] : f(a, um, bw)) {
                int r = x->deg(o) - in_deg;
                out.add(o, cx * c * sign_of(q + r + 1 + d - x->deg(m)));
            }
        }
        return out;
    });
}

XCochain h_left(const KellerTriple& t, const XCochain& f) {
    auto x = t.x;
    auto dual = t.dual;
    return XCochain([x, dual, f](const Word& a, const Key& m, const Word& b) {
        Vec out;
        auto [u, xs] = KellerX::split(m);
        Word aw = a;
        aw.push_back(u);
        int in_deg = x->deg(m) + word_degree(*dual, b);
        for (const auto& [o, c] : f(aw, KellerX::make({}, xs), b)) {
            int r = x->deg(o) - in_deg;
            out.add(o, c * sign_of(r + 1));
        }
        return out;
    });
}

namespace {

// Rank of the map sending each basis operator (src ↦ tgt) to the values of
// rows(f) over a fixed list of probes.
struct RowIndex {
    std::map<std::tuple<Word, Key, Word, Key>, int> index;
    int of(const Word& a, const Key& x, const Word& b, const Key& out) {
        auto [it, fresh] = index.try_emplace({a, x, b, out}, static_cast<int>(index.size()));
        return it->second;
    }
};

struct Probe {
    Word a;
    Key x;
    Word b;
};

int kernel_dimension(const std::vector<std::pair<Key, Key>>& cols, const std::vector<Probe>& probes,
                     const std::function<XCochain(const XCochain&)>& op) {
    RowIndex rows;
    ColumnMatrix m;
    for (const auto& [src, tgt] : cols) {
        XCochain f([src, tgt](const Word& a, const Key& x, const Word& b) {
            return a.empty() && b.empty() && x == src ? Vec(tgt) : Vec();
        });
        XCochain df = op(f);
        SparseRow col;
        for (const auto& pr : probes)
            for (const auto& [o, c] : df(pr.a, pr.x, pr.b)) col[rows.of(pr.a, pr.x, pr.b, o)] += c;
        for (auto it = col.begin(); it != col.end();) it = it->second == 0 ? col.erase(it) : std::next(it);
        m.cols.push_back(std::move(col));
    }
    m.rows = static_cast<int>(rows.index.size());
    return static_cast<int>(cols.size()) - matrix_rank(m);
}

}  // namespace

KernelComparison right_kernel_dims(const KellerTriple& t, int pbw) {
    KernelComparison out;
    auto w = t.x->basis(pbw);
    std::map<int, std::vector<std::pair<Key, Key>>> by_degree;
    for (const auto& s : w)
        for (const auto& o : w) by_degree[t.x->deg(o) - t.x->deg(s)].push_back({s, o});
    std::vector<Probe> probes;
    for (const auto& x : w)
        for (const auto& b : t.dual->basis(-1)) probes.push_back({{}, x, {b}});
    auto trio = t.trio;
    int top = -t.dim();
    auto units = t.ug->basis(pbw);
    for (const auto& [r, cols] : by_degree) {
        out.kernel[r] = kernel_dimension(cols, probes, [trio](const XCochain& f) { return trio->d_right(f); });
        int expected = 0;
        for (const auto& o : w)
            if (t.x->deg(o) - top == r) expected += static_cast<int>(units.size());
        out.expected[r] = expected;
    }
    return out;
}

KernelComparison left_kernel_dims(const KellerTriple& t, int pbw, int extra) {
    KernelComparison out;
    auto w = t.x->basis(pbw);
    auto target = t.x->basis(pbw + extra);
    auto small = t.x->basis(extra);
    std::map<int, std::vector<std::pair<Key, Key>>> by_degree;
    for (const auto& s : w)
        for (const auto& o : target) by_degree[t.x->deg(o) - t.x->deg(s)].push_back({s, o});
    std::vector<Probe> probes;
    for (const auto& a : t.ug->basis(pbw))
        for (const auto& x : w)
            if (static_cast<int>(a.size() + KellerX::split(x).first.size()) <= pbw) probes.push_back({{a}, x, {}});
    auto trio = t.trio;
    for (const auto& [r, cols] : by_degree) {
        out.kernel[r] = kernel_dimension(cols, probes, [trio](const XCochain& f) { return trio->d_left(f); });
        int expected = 0;
        for (const auto& x : t.sym->basis(-1))
            for (const auto& o : small)
                if (t.x->deg(o) + static_cast<int>(x.size()) == r) ++expected;
        out.expected[r] = expected;
    }
    return out;
}

ConeEpsilon::ConeEpsilon(const KellerTriple& t, int depth) : t_(t), depth_(depth) {
    if (depth < 0) throw ContractError("cone depth must be nonnegative");
    h_[Key{0}] = Vec(Key{1, 0});
    auto odd = t.sym->basis(-1);
    for (int p = 0; p <= depth; ++p) {
        for (int k = 0; k <= p && k <= t.dim(); ++k) {
            int l = p - k;
            std::vector<Key> targets;
            for (const auto& u : t.ug->basis(l))
                if (static_cast<int>(u.size()) == l)
                    for (const auto& x : odd)
                        if (static_cast<int>(x.size()) == k) {
                            Key v{1};
                            Key m = KellerX::make(u, x);
                            v.insert(v.end(), m.begin(), m.end());
                            targets.push_back(v);
                        }
            std::vector<Key> candidates;
            if (k + 1 <= t.dim())
                for (const auto& u : t.ug->basis(p - k - 1))
                    for (const auto& x : odd)
                        if (static_cast<int>(x.size()) == k + 1) {
                            Key c{1};
                            Key m = KellerX::make(u, x);
                            c.insert(c.end(), m.begin(), m.end());
                            candidates.push_back(c);
                        }
            std::map<Key, int> rows;
            auto row_of = [&rows](const Key& key) { return rows.try_emplace(key, static_cast<int>(rows.size())).first->second; };
            ColumnMatrix dm;
            for (const auto& c : candidates) {
                SparseRow col;
                for (const auto& [key, coeff] : d(c)) col[row_of(key)] += coeff;
                dm.cols.push_back(col);
            }
            for (const auto& v : targets) {
                Vec w(v);
                w.add(h(d(v)), Q(-1));
                Vec hv;
                if (!w.is_zero()) {
                    SparseRow rhs;
                    for (const auto& [key, coeff] : w) rhs[row_of(key)] = coeff;
                    dm.rows = static_cast<int>(rows.size());
                    auto sol = matrix_solve(dm, rhs);
                    if (!sol)
                        throw ContractError("cone of the augmentation: no preimage for " + key_string(v));
                    for (const auto& [i, c] : *sol) hv.add(candidates[i], c);
                }
                h_[v] = hv;
            }
        }
    }
}

int ConeEpsilon::deg(const Key& k) const {
    if (k.at(0) == 0) return 0;
    return t_.x->deg(Key(k.begin() + 1, k.end())) - 1;
}

int ConeEpsilon::level(const Key& k) {
    if (k.at(0) == 0) return 0;
    auto [u, x] = KellerX::split(Key(k.begin() + 1, k.end()));
    return static_cast<int>(u.size() + x.size());
}

int ConeEpsilon::pbw_length(const Key& k) {
    if (k.at(0) == 0) return -1;
    return static_cast<int>(KellerX::split(Key(k.begin() + 1, k.end())).first.size());
}

Vec ConeEpsilon::d(const Key& k) const {
    Vec out;
    if (k.at(0) == 0) return out;
    Key m(k.begin() + 1, k.end());
    for (const auto& [key, c] : t_.x->d(m)) {
        Key down{1};
        down.insert(down.end(), key.begin(), key.end());
        out.add(down, -c);
    }
    if (m == KellerX::make({}, {})) out.add(Key{0}, Q(1));
    return out;
}

Vec ConeEpsilon::d(const Vec& v) const {
    return apply_linear(v, [this](const Key& k) { return d(k); });
}

Vec ConeEpsilon::h(const Key& k) const {
    auto it = h_.find(k);
    if (it == h_.end())
        throw ContractError("cone of the augmentation: " + key_string(k) + " lies beyond the window depth " +
                            std::to_string(depth_));
    return it->second;
}

Vec ConeEpsilon::h(const Vec& v) const {
    return apply_linear(v, [this](const Key& k) { return h(k); });
}

std::vector<Key> ConeEpsilon::filtration_basis(int p) const {
    if (p > depth_)
        throw ContractError("refused: filtration level " + std::to_string(p) + " exceeds the window depth " +
                            std::to_string(depth_));
    std::vector<Key> out{Key{0}};
    for (const auto& m : t_.x->basis(p)) {
        auto [u, x] = KellerX::split(m);
        if (static_cast<int>(u.size() + x.size()) > p) continue;
        Key k{1};
        k.insert(k.end(), m.begin(), m.end());
        out.push_back(k);
    }
    return out;
}

namespace cone_rho {

namespace {

Vec shift(const Vec& v, int a) {
    Vec out;
    for (const auto& [k, c] : v) out.add(Key{k[0], k[1] + a}, c);
    return out;
}

}  // namespace

ConeElement left(int a, const ConeElement& m) {
    return [a, m](int col) { return shift(m(col), a); };
}

ConeElement right(const ConeElement& m, int a) {
    return [a, m](int col) { return col < 0 ? shift(m(col), a) : m(col + a); };
}

ConeElement d(const ConeElement& m) {
    return [m](int col) {
        Vec out;
        if (col < 0) return out;
        for (const auto& [k, c] : m(-1)) out.add(Key{1, k[1] + col}, c);
        for (const auto& [k, c] : m(col))
            if (k[0] == 1) out.add(Key{2, k[1] + 1}, c);
        for (const auto& [k, c] : m(col + 1))
            if (k[0] == 1) out.add(Key{2, k[1]}, -c);
        return out;
    };
}

ConeElement h(const ConeElement& m) {
    return [m](int col) {
        Vec out;
        if (col < 0) {
            for (const auto& [k, c] : m(0))
                if (k[0] == 1) out.add(Key{0, k[1]}, c);
            return out;
        }
        for (int j = 0; j < col; ++j)
            for (const auto& [k, c] : m(j))
                if (k[0] == 2) out.add(Key{1, k[1] + col - 1 - j}, -c);
        return out;
    };
}

ConeElement part(const ConeElement& m, int degree) {
    return [m, degree](int col) {
        Vec out;
        for (const auto& [k, c] : m(col))
            if (k[0] == degree + 1) out.add(k, c);
        return out;
    };
}

bool equal(const ConeElement& m, const ConeElement& n, int columns) {
    for (int col = -1; col <= columns; ++col)
        if (m(col) != n(col)) return false;
    return true;
}

}  // namespace cone_rho

namespace {

// Caches the probes of an element; nested homotopies revisit columns often.
ConeElement memoize(const ConeElement& m) {
    auto cache = std::make_shared<std::map<int, Vec>>();
    return [m, cache](int col) {
        auto it = cache->find(col);
        if (it != cache->end()) return it->second;
        Vec v = m(col);
        cache->emplace(col, v);
        return v;
    };
}

ConeCochain memoize_cochain(const ConeCochain& f) {
    auto cache = std::make_shared<std::map<std::vector<int>, ConeElement>>();
    return [f, cache](const std::vector<int>& w) {
        auto it = cache->find(w);
        if (it != cache->end()) return it->second;
        ConeElement m = memoize(f(w));
        cache->emplace(w, m);
        return m;
    };
}

ConeElement zero_element() {
    return [](int) { return Vec(); };
}

std::vector<std::vector<int>> exponent_words(int arity, int max_exp) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < arity; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& w : out)
            for (int e = 0; e <= max_exp; ++e) {
                auto x = w;
                x.push_back(e);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

ConeCochain cone_dh(const ConeCochain& f) {
    return memoize_cochain([f](const std::vector<int>& w) -> ConeElement {
        if (w.empty()) return zero_element();
        int p = static_cast<int>(w.size()) - 1;
        std::vector<int> tail(w.begin() + 1, w.end()), head(w.begin(), w.end() - 1);
        std::vector<ConeElement> merged;
        for (int i = 0; i < p; ++i) {
            std::vector<int> m(w.begin(), w.begin() + i);
            m.push_back(w[i] + w[i + 1]);
            m.insert(m.end(), w.begin() + i + 2, w.end());
            merged.push_back(f(m));
        }
        // The sign of each term depends on the degree r = tag − 1 of the value.
        return [p, a0 = w[0], ap = w[p], ft = f(tail), fh = f(head), merged](int col) {
            Vec out;
            for (const auto& [k, c] : ft(col)) out.add(Key{k[0], k[1] + a0}, c * sign_of(p + k[0] - 2));
            for (int i = 0; i < p; ++i)
                for (const auto& [k, c] : merged[i](col)) out.add(k, c * sign_of(p + k[0] - 1 + i));
            Vec last = col < 0 ? fh(col) : fh(col + ap);
            for (const auto& [k, c] : last) out.add(col < 0 ? Key{k[0], k[1] + ap} : k, c * sign_of(k[0] - 1));
            return out;
        };
    });
}

ConeCochain cone_partial(const ConeCochain& f) {
    return memoize_cochain([f](const std::vector<int>& w) { return cone_rho::d(f(w)); });
}

ConeCochain cone_H(const ConeCochain& f) {
    return memoize_cochain([f](const std::vector<int>& w) { return cone_rho::h(f(w)); });
}

ConeCochain random_cone_cochain(int arity, int degree, std::uint64_t seed) {
    return [arity, degree, seed](const std::vector<int>& w) -> ConeElement {
        if (static_cast<int>(w.size()) != arity) return zero_element();
        Key wk(w.begin(), w.end());
        std::uint64_t base = hash_key(seed, wk);
        return [base, degree](int col) {
            Vec out;
            if ((degree < 0) != (col < 0)) return out;
            Rng rng(mix_seed(base, static_cast<std::uint64_t>(col + 1)));
            for (int n = 0; n <= 3; ++n)
                if (rng.chance(1, 2)) out.add(Key{degree + 1, n}, Q(rng.coeff()));
            return out;
        };
    };
}

bool cone_cochains_equal(const ConeCochain& f, const ConeCochain& g, int arity, int max_exp, int columns) {
    for (const auto& w : exponent_words(arity, max_exp))
        if (!cone_rho::equal(f(w), g(w), columns)) return false;
    return true;
}

HomotopySequence frak_h_sequence(const ConeCochain& f, int max_k, int probe_arity, int probe_columns) {
    HomotopySequence seq;
    ConeCochain term = cone_H(f);
    ConeCochain zero = [](const std::vector<int>&) { return zero_element(); };
    for (int k = 0; k <= max_k; ++k) {
        if (k > 0) term = cone_H(cone_dh(term));
        seq.terms.push_back(term);
        if (probe_arity >= 0 && !seq.vanishing_index && cone_cochains_equal(term, zero, probe_arity + k, 2, probe_columns))
            seq.vanishing_index = k;
    }
    return seq;
}

}  // namespace hk
