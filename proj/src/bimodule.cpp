#include "hochkit/bimodule.hpp"

#include <algorithm>

namespace hk {

namespace {

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
}

Word splice(const Word& w, std::size_t from, std::size_t to, const Key& k) {
    Word out(w.begin(), w.begin() + static_cast<long>(from));
    out.push_back(k);
    out.insert(out.end(), w.begin() + static_cast<long>(to), w.end());
    return out;
}

Word tag_word(int t, const Word& w) {
    Word out;
    for (const auto& k : w) out.push_back(Semidirect::tag(t, k));
    return out;
}

Word untag_word(const Word& w) {
    Word out;
    for (const auto& k : w) out.push_back(Semidirect::untag(k));
    return out;
}

}  // namespace

XCochain operator+(const XCochain& f, const XCochain& g) {
    return XCochain([f, g](const Word& a, const Key& x, const Word& b) { return f(a, x, b) + g(a, x, b); });
}

XCochain operator-(const XCochain& f, const XCochain& g) {
    return XCochain([f, g](const Word& a, const Key& x, const Word& b) { return f(a, x, b) - g(a, x, b); });
}

XCochain scale(const XCochain& f, const Q& c) {
    return XCochain([f, c](const Word& a, const Key& x, const Word& b) { return f(a, x, b).scaled(c); });
}

TrioComplex::TrioComplex(AlgebraPtr a, BimodulePtr x, AlgebraPtr b)
    : a_(std::move(a)), x_(std::move(x)), b_(std::move(b)), s_(std::make_shared<Semidirect>(a_, x_, b_)) {}

int TrioComplex::internal_degree(const Key& out, const Word& a, const Key& x, const Word& b) const {
    return x_->deg(out) - word_degree(*a_, a) - x_->deg(x) - word_degree(*b_, b);
}

XCochain TrioComplex::d_ax(const Cochain& fa) const {
    return XCochain([this, fa](const Word& a, const Key& x, const Word& b) {
        Vec out;
        if (!b.empty()) return out;
        int da = word_degree(*a_, a);
        for (const auto& [k, c] : fa(a)) out.add(x_->left(k, x), c * sign_of(a_->deg(k) - da));
        return out;
    });
}

XCochain TrioComplex::d_xb(const Cochain& fb) const {
    return XCochain([this, fb](const Word& a, const Key& x, const Word& b) {
        Vec out;
        if (!a.empty()) return out;
        int q = static_cast<int>(b.size());
        int db = word_degree(*b_, b);
        int dx = x_->deg(x);
        for (const auto& [k, c] : fb(b)) {
            int r = b_->deg(k) - db;
            out.add(x_->right(x, k), c * sign_of(q + r - 1 + r * dx));
        }
        return out;
    });
}

XCochain TrioComplex::d_left(const XCochain& f) const {
    return XCochain([this, f](const Word& a, const Key& x, const Word& b) {
        Vec out;
        if (a.empty()) return out;
        int p = static_cast<int>(a.size()) - 1;
        int q = static_cast<int>(b.size());
        Word tail = slice(a, 1, a.size());
        int a0 = a_->deg(a[0]);
        for (const auto& [m, c] : f(tail, x, b)) {
            int r = internal_degree(m, tail, x, b);
            out.add(x_->left(a[0], m), c * sign_of(p + q + r + r * a0));
        }
        int total = word_degree(*a_, a) + x_->deg(x) + word_degree(*b_, b);
        for (int i = 0; i < p; ++i)
            for (const auto& [prod, cp] : a_->mul(a[i], a[i + 1]))
                for (const auto& [m, c] : f(splice(a, i, i + 2, prod), x, b)) {
                    int r = x_->deg(m) - total;
                    out.add(m, cp * c * sign_of(p + q + r + i + 1));
                }
        Word head = slice(a, 0, p);
        for (const auto& [ax, cx] : x_->left(a[p], x))
            for (const auto& [m, c] : f(head, ax, b)) {
                int r = x_->deg(m) - total;
                out.add(m, cx * c * sign_of(q + r + 1));
            }
        return out;
    });
}

XCochain TrioComplex::d_right(const XCochain& f) const {
    return XCochain([this, f](const Word& a, const Key& x, const Word& b) {
        Vec out;
        if (b.empty()) return out;
        int q = static_cast<int>(b.size()) - 1;
        int total = word_degree(*a_, a) + x_->deg(x) + word_degree(*b_, b);
        Word tail = slice(b, 1, b.size());
        for (const auto& [xb, cx] : x_->right(x, b[0]))
            for (const auto& [m, c] : f(a, xb, tail)) {
                int r = x_->deg(m) - total;
                out.add(m, cx * c * sign_of(q + r - 1));
            }
        for (int j = 0; j < q; ++j)
            for (const auto& [prod, cp] : b_->mul(b[j], b[j + 1]))
                for (const auto& [m, c] : f(a, x, splice(b, j, j + 2, prod))) {
                    int r = x_->deg(m) - total;
                    out.add(m, cp * c * sign_of(q + r + j));
                }
        Word head = slice(b, 0, q);
        int head_total = total - b_->deg(b[q]);
        for (const auto& [m, c] : f(a, x, head)) {
            int r = x_->deg(m) - head_total;
            out.add(x_->right(m, b[q]), c * sign_of(r));
        }
        return out;
    });
}

XCochain TrioComplex::partial_x(const XCochain& f) const {
    return XCochain([this, f](const Word& a, const Key& x, const Word& b) {
        Vec out;
        for (const auto& [m, c] : f(a, x, b)) out.add(x_->d(m), c);
        int total = word_degree(*a_, a) + x_->deg(x) + word_degree(*b_, b);
        int prefix = 0;
        auto add_term = [&](const Vec& vals, const Q& cd) {
            for (const auto& [m, c] : vals) {
                int r = x_->deg(m) - (total + 1);
                out.add(m, -cd * c * sign_of(r + prefix));
            }
        };
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (const auto& [da, cd] : a_->d(a[i])) add_term(f(splice(a, i, i + 1, da), x, b), cd);
            prefix += a_->deg(a[i]);
        }
        for (const auto& [dx, cd] : x_->d(x)) add_term(f(a, dx, b), cd);
        prefix += x_->deg(x);
        for (std::size_t j = 0; j < b.size(); ++j) {
            for (const auto& [db, cd] : b_->d(b[j])) add_term(f(a, x, splice(b, j, j + 1, db)), cd);
            prefix += b_->deg(b[j]);
        }
        return out;
    });
}

XCochain TrioComplex::d_x(const XCochain& f) const { return d_left(f) + d_right(f) + partial_x(f); }

TrioCochain TrioComplex::differential(const TrioCochain& t) const {
    auto ma = std::make_shared<AlgebraAsBimodule>(a_);
    auto mb = std::make_shared<AlgebraAsBimodule>(b_);
    const Algebra& A = *a_;
    const Algebra& B = *b_;
    Cochain da([ma, &A, fa = t.a](const Word& w) { return hoch_total(A, *ma, fa)(w); });
    Cochain db([mb, &B, fb = t.b](const Word& w) { return hoch_total(B, *mb, fb)(w); });
    return {da, d_ax(t.a) + d_x(t.x) + d_xb(t.b), db};
}

Cochain TrioComplex::embed(const TrioCochain& t) const {
    return Cochain([t](const Word& w) {
        Vec out;
        std::size_t i = 0;
        while (i < w.size() && Semidirect::tag_of(w[i]) == 0) ++i;
        if (i == w.size()) out.add(Semidirect::tag(0, t.a(untag_word(w))));
        std::size_t j = i;
        if (j < w.size() && Semidirect::tag_of(w[j]) == 1) {
            std::size_t k = j + 1;
            while (k < w.size() && Semidirect::tag_of(w[k]) == 2) ++k;
            if (k == w.size())
                out.add(Semidirect::tag(1, t.x(untag_word(slice(w, 0, j)), Semidirect::untag(w[j]),
                                                untag_word(slice(w, j + 1, w.size())))));
        }
        bool all_b = true;
        for (const auto& k : w) all_b &= Semidirect::tag_of(k) == 2;
        if (all_b) out.add(Semidirect::tag(2, t.b(untag_word(w))));
        return out;
    });
}

TrioCochain TrioComplex::project(const Cochain& f) const {
    Cochain fa([f](const Word& w) { return Semidirect::part(f(tag_word(0, w)), 0); });
    XCochain fx([f](const Word& a, const Key& x, const Word& b) {
        Word w = tag_word(0, a);
        w.push_back(Semidirect::tag(1, x));
        for (const auto& k : b) w.push_back(Semidirect::tag(2, k));
        return Semidirect::part(f(w), 1);
    });
    Cochain fb([f](const Word& w) { return Semidirect::part(f(tag_word(2, w)), 2); });
    return {fa, fx, fb};
}

TrioCochain TrioComplex::cup(const TrioCochain& f, const TrioCochain& g) const {
    return project(hk::cup(*s_, embed(f), embed(g)));
}

TrioCochain TrioComplex::circ(const TrioCochain& f, const TrioCochain& g, int i) const {
    auto m = std::make_shared<AlgebraAsBimodule>(s_);
    Cochain c = hk::circ(*s_, *m, embed(f), embed(g), i);
    return project(Cochain([m, c](const Word& w) { return c(w); }));
}

TrioCochain TrioComplex::bracket(const TrioCochain& f, const TrioCochain& g) const {
    return project(hk::bracket(*s_, embed(f), embed(g)));
}

OpCochain TrioComplex::end_total_left(const OpCochain& f) const {
    return [this, f](const Word& w, const Key& x) {
        Vec out;
        int dx = x_->deg(x);
        int total = word_degree(*a_, w);
        if (!w.empty()) {
            int p = static_cast<int>(w.size()) - 1;
            Word tail = slice(w, 1, w.size());
            int tail_deg = total - a_->deg(w[0]);
            for (const auto& [m, c] : f(tail, x)) {
                int r = x_->deg(m) - dx - tail_deg;
                out.add(x_->left(w[0], m), c * sign_of((p + r - 1) + r * a_->deg(w[0])));
            }
            for (int i = 0; i < p; ++i)
                for (const auto& [prod, cp] : a_->mul(w[i], w[i + 1]))
                    for (const auto& [m, c] : f(splice(w, i, i + 2, prod), x)) {
                        int r = x_->deg(m) - dx - total;
                        out.add(m, cp * c * sign_of(p + r + i));
                    }
            Word head = slice(w, 0, p);
            int head_deg = total - a_->deg(w[p]);
            for (const auto& [ax, cx] : x_->left(w[p], x))
                for (const auto& [m, c] : f(head, ax)) {
                    int r = x_->deg(m) - x_->deg(ax) - head_deg;
                    out.add(m, cx * c * sign_of(r));
                }
        }
        for (const auto& [m, c] : f(w, x)) out.add(x_->d(m), c);
        for (const auto& [xd, cx] : x_->d(x))
            for (const auto& [m, c] : f(w, xd)) out.add(m, -cx * c * sign_of(x_->deg(m) - x_->deg(xd)));
        int prefix = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (const auto& [da, cd] : a_->d(w[i]))
                for (const auto& [m, c] : f(splice(w, i, i + 1, da), x)) {
                    int r = x_->deg(m) - dx - (total + 1);
                    out.add(m, -cd * c * sign_of(r + prefix));
                }
            prefix += a_->deg(w[i]);
        }
        return out;
    };
}

OpCochain TrioComplex::end_total_right(const OpCochain& f) const {
    return [this, f](const Word& w, const Key& x) {
        Vec out;
        int dx = x_->deg(x);
        int total = word_degree(*b_, w);
        if (!w.empty()) {
            int q = static_cast<int>(w.size()) - 1;
            Word tail = slice(w, 1, w.size());
            int b0 = b_->deg(w[0]);
            int tail_deg = total - b0;
            for (const auto& [xb, cx] : x_->right(x, w[0]))
                for (const auto& [m, c] : f(tail, xb)) {
                    int phi = x_->deg(m) - x_->deg(xb);
                    int r = phi - tail_deg;
                    out.add(m, cx * c * sign_of((q + r - 1) + r * b0 + b0 * (phi + dx)));
                }
            for (int j = 0; j < q; ++j)
                for (const auto& [prod, cp] : b_->mul(w[j], w[j + 1]))
                    for (const auto& [m, c] : f(splice(w, j, j + 2, prod), x)) {
                        int r = x_->deg(m) - dx - total;
                        out.add(m, cp * c * sign_of(q + r + j));
                    }
            Word head = slice(w, 0, q);
            int bq = b_->deg(w[q]);
            for (const auto& [m, c] : f(head, x)) {
                int r = x_->deg(m) - dx - (total - bq);
                out.add(x_->right(m, w[q]), c * sign_of(r + bq * dx));
            }
        }
        for (const auto& [m, c] : f(w, x)) out.add(x_->d(m), c);
        for (const auto& [xd, cx] : x_->d(x))
            for (const auto& [m, c] : f(w, xd)) out.add(m, -cx * c * sign_of(x_->deg(m) - x_->deg(xd)));
        int prefix = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
            for (const auto& [db, cd] : b_->d(w[j]))
                for (const auto& [m, c] : f(splice(w, j, j + 1, db), x)) {
                    int r = x_->deg(m) - dx - (total + 1);
                    out.add(m, -cd * c * sign_of(r + prefix));
                }
            prefix += b_->deg(w[j]);
        }
        return out;
    };
}

XCochain TrioComplex::phi(const OpCochain& f) const {
    return XCochain([this, f](const Word& a, const Key& x, const Word& b) {
        Vec out;
        if (!b.empty()) return out;
        for (const auto& [m, c] : f(a, x)) out.add(m, c * sign_of(internal_degree(m, a, x, b)));
        return out;
    });
}

XCochain TrioComplex::psi(const OpCochain& f) const {
    return XCochain([this, f](const Word& a, const Key& x, const Word& b) {
        Vec out;
        if (!a.empty()) return out;
        int q = static_cast<int>(b.size());
        int db = word_degree(*b_, b);
        int dx = x_->deg(x);
        for (const auto& [m, c] : f(b, x)) {
            int r = x_->deg(m) - dx - db;
            out.add(m, c * sign_of(q + r - 1 + dx * db));
        }
        return out;
    });
}

OpCochain TrioComplex::rho_a_star(const Cochain& fa) const {
    return [this, fa](const Word& w, const Key& x) {
        Vec out;
        for (const auto& [k, c] : fa(w)) out.add(x_->left(k, x), c);
        return out;
    };
}

std::vector<Word> TrioComplex::ambient_words(const TrioWindow& win, int max_len, int per_length,
                                             std::uint64_t seed) const {
    std::vector<Key> all;
    for (const auto& k : win.a) all.push_back(Semidirect::tag(0, k));
    for (const auto& k : win.x) all.push_back(Semidirect::tag(1, k));
    for (const auto& k : win.b) all.push_back(Semidirect::tag(2, k));
    std::vector<Word> out;
    Rng rng(mix_seed(seed, 0xa3b1));
    auto pick = [&](const std::vector<Key>& v, int t) { return Semidirect::tag(t, v[rng.below(static_cast<int>(v.size()))]); };
    for (int n = 0; n <= max_len; ++n) {
        for (auto& w : sample_words(all, n, per_length, mix_seed(seed, n))) out.push_back(w);
        for (int t = 0; t < per_length; ++t) {
            Word w;
            int p = n == 0 ? 0 : rng.below(n);
            for (int i = 0; i < p; ++i) w.push_back(pick(win.a, 0));
            if (n > 0) w.push_back(pick(win.x, 1));
            while (static_cast<int>(w.size()) < n) w.push_back(pick(win.b, 2));
            out.push_back(std::move(w));
            Word wa, wb;
            for (int i = 0; i < n; ++i) {
                wa.push_back(pick(win.a, 0));
                wb.push_back(pick(win.b, 2));
            }
            out.push_back(std::move(wa));
            out.push_back(std::move(wb));
        }
    }
    return out;
}

XCochain random_xcochain(const TrioComplex& t, const ValueWindow& values, const std::vector<std::pair<int, int>>& shapes,
                         int r, std::uint64_t seed) {
    auto vals = std::make_shared<ValueWindow>(values);
    return XCochain([&t, vals, shapes, r, seed](const Word& a, const Key& x, const Word& b) {
        Vec out;
        std::pair<int, int> shape{static_cast<int>(a.size()), static_cast<int>(b.size())};
        if (std::find(shapes.begin(), shapes.end(), shape) == shapes.end()) return out;
        int deg = r + word_degree(t.a(), a) + t.x().deg(x) + word_degree(t.b(), b);
        auto it = vals->by_degree.find(deg);
        if (it == vals->by_degree.end()) return out;
        Word w = tag_word(0, a);
        w.push_back(Semidirect::tag(1, x));
        for (const auto& k : b) w.push_back(Semidirect::tag(2, k));
        Rng rng(hash_word(seed, w));
        for (const auto& k : it->second)
            if (rng.chance(1, 2)) out.add(k, rng.coeff());
        return out;
    });
}

OpCochain random_opcochain(const Algebra& a, const Bimodule& x, const ValueWindow& values, const std::vector<int>& arities,
                           int r, std::uint64_t seed) {
    auto vals = std::make_shared<ValueWindow>(values);
    return [&a, &x, vals, arities, r, seed](const Word& w, const Key& in) {
        Vec out;
        if (std::find(arities.begin(), arities.end(), static_cast<int>(w.size())) == arities.end()) return out;
        auto it = vals->by_degree.find(r + word_degree(a, w) + x.deg(in));
        if (it == vals->by_degree.end()) return out;
        Word tagged = w;
        tagged.push_back(Semidirect::tag(1, in));
        Rng rng(hash_word(seed, tagged));
        for (const auto& k : it->second)
            if (rng.chance(1, 2)) out.add(k, rng.coeff());
        return out;
    };
}

std::optional<TrioDifference> x_difference(const XCochain& f, const XCochain& g, const TrioWindow& w, int per_shape,
                                           std::uint64_t seed) {
    for (int p = 0; p <= w.max_p; ++p)
        for (int q = 0; q <= w.max_q; ++q) {
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(p * 31 + q)));
            auto as = sample_words(w.a, p, per_shape, rng.next());
            auto bs = sample_words(w.b, q, per_shape, rng.next());
            for (int t = 0; t < per_shape; ++t) {
                const Word& a = as[rng.below(static_cast<int>(as.size()))];
                const Word& b = bs[rng.below(static_cast<int>(bs.size()))];
                const Key& x = w.x[rng.below(static_cast<int>(w.x.size()))];
                if (f(a, x, b) != g(a, x, b))
                    return TrioDifference{"X-part at (" + word_string(a) + "; " + key_string(x) + "; " + word_string(b) + ")"};
            }
        }
    return std::nullopt;
}

std::optional<TrioDifference> trio_difference(const TrioCochain& f, const TrioCochain& g, const TrioWindow& w,
                                              int per_shape, std::uint64_t seed) {
    for (int p = 0; p <= w.max_p; ++p)
        for (const auto& a : sample_words(w.a, p, per_shape, mix_seed(seed, p)))
            if (f.a(a) != g.a(a)) return TrioDifference{"A-part at " + word_string(a)};
    for (int q = 0; q <= w.max_q; ++q)
        for (const auto& b : sample_words(w.b, q, per_shape, mix_seed(seed, 100 + q)))
            if (f.b(b) != g.b(b)) return TrioDifference{"B-part at " + word_string(b)};
    return x_difference(f.x, g.x, w, per_shape, seed);
}

}  // namespace hk
