#include "hochkit/hochschild.hpp"

#include <memory>

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

}  // namespace

Vec Cochain::eval(const std::vector<Vec>& args) const {
    Vec out;
    Word w(args.size());
    std::function<void(std::size_t, Q)> rec = [&](std::size_t i, Q c) {
        if (i == args.size()) {
            out.add(fn_(w), c);
            return;
        }
        for (const auto& [k, v] : args[i]) {
            w[i] = k;
            rec(i + 1, c * v);
        }
    };
    rec(0, 1);
    return out;
}

int word_degree(const Algebra& a, const Word& w, std::size_t from, std::size_t to) {
    int s = 0;
    to = std::min(to, w.size());
    for (std::size_t i = from; i < to; ++i) s += a.deg(w[i]);
    return s;
}

int internal_degree(const Bimodule& m, const Key& out, const Algebra& a, const Word& w) {
    return m.deg(out) - word_degree(a, w);
}

Cochain hoch_dh(const Algebra& a, const Bimodule& m, const Cochain& f) {
    return Cochain([&a, &m, f](const Word& w) {
        Vec out;
        if (w.empty()) return out;
        int p = static_cast<int>(w.size()) - 1;
        int a0 = a.deg(w[0]);
        Word tail = slice(w, 1, w.size());
        int tail_deg = word_degree(a, tail);
        for (const auto& [k, c] : f(tail)) {
            int r = m.deg(k) - tail_deg;
            out.add(m.left(w[0], k), c * sign_of((p + r - 1) + r * a0));
        }
        int total = word_degree(a, w);
        for (int i = 0; i < p; ++i) {
            for (const auto& [prod, cp] : a.mul(w[i], w[i + 1])) {
                for (const auto& [k, c] : f(splice(w, i, i + 2, prod))) {
                    int r = m.deg(k) - total;
                    out.add(k, cp * c * sign_of(p + r + i));
                }
            }
        }
        Word head = slice(w, 0, p);
        int head_deg = word_degree(a, head);
        for (const auto& [k, c] : f(head)) {
            int r = m.deg(k) - head_deg;
            out.add(m.right(k, w[p]), c * sign_of(r));
        }
        return out;
    });
}

Cochain hoch_partial(const Algebra& a, const Bimodule& m, const Cochain& f) {
    return Cochain([&a, &m, f](const Word& w) {
        Vec out;
        for (const auto& [k, c] : f(w)) out.add(m.d(k), c);
        int total = word_degree(a, w);
        int prefix = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (const auto& [da, cd] : a.d(w[i])) {
                for (const auto& [k, c] : f(splice(w, i, i + 1, da))) {
                    int r = m.deg(k) - (total + 1);
                    out.add(k, -cd * c * sign_of(r + prefix));
                }
            }
            prefix += a.deg(w[i]);
        }
        return out;
    });
}

Cochain hoch_total(const Algebra& a, const Bimodule& m, const Cochain& f) {
    return hoch_dh(a, m, f) + hoch_partial(a, m, f);
}

Cochain cup(const Algebra& a, const Cochain& f, const Cochain& g) {
    return Cochain([&a, f, g](const Word& w) {
        Vec out;
        int n = static_cast<int>(w.size());
        for (int p1 = 0; p1 <= n; ++p1) {
            int p2 = n - p1;
            Vec fv = f(slice(w, 0, p1));
            if (fv.is_zero()) continue;
            Word right = slice(w, p1, n);
            int right_deg = word_degree(a, right);
            int left_deg = word_degree(a, w, 0, p1);
            for (const auto& [kg, cg] : g(right)) {
                int r2 = a.deg(kg) - right_deg;
                int s = sign_of(p1 * p2 + r2 * (left_deg + p1));
                for (const auto& [kf, cf] : fv) out.add(a.mul(kf, kg), cf * cg * s);
            }
        }
        return out;
    });
}

Cochain circ(const Algebra& a, const Bimodule&, const Cochain& f, const Cochain& g, int i) {
    if (i < 1) throw ContractError("circ: insertion index must be positive");
    return Cochain([&a, f, g, i](const Word& w) {
        Vec out;
        int n = static_cast<int>(w.size());
        for (int p2 = 0; p2 <= n; ++p2) {
            int p1 = n - p2 + 1;
            if (p1 < i) continue;
            Word inner = slice(w, i - 1, i - 1 + p2);
            int inner_deg = word_degree(a, inner);
            int prefix = word_degree(a, w, 0, i - 1);
            for (const auto& [k, c] : g(inner)) {
                int r2 = a.deg(k) - inner_deg;
                out.add(f(splice(w, i - 1, i - 1 + p2, k)), c * sign_of(r2 * prefix));
            }
        }
        return out;
    });
}

Cochain bracket(const Algebra& a, const Cochain& f, const Cochain& g) {
    return Cochain([&a, f, g](const Word& w) {
        Vec out;
        int n = static_cast<int>(w.size());
        int total = word_degree(a, w);
        // Σ_i ± f ∘_i g, then Σ_j ± g ∘_j f with the swap sign.
        for (int pass = 0; pass < 2; ++pass) {
            const Cochain& outer = pass == 0 ? f : g;
            const Cochain& in = pass == 0 ? g : f;
            for (int pin = 0; pin <= n; ++pin) {
                int pout = n - pin + 1;
                for (int i = 1; i <= pout; ++i) {
                    Word inner = slice(w, i - 1, i - 1 + pin);
                    int inner_deg = word_degree(a, inner);
                    int prefix = word_degree(a, w, 0, i - 1);
                    for (const auto& [k, c] : in(inner)) {
                        int rin = a.deg(k) - inner_deg;
                        int outer_in_deg = total - inner_deg + a.deg(k);
                        for (const auto& [ko, co] : outer(splice(w, i - 1, i - 1 + pin, k))) {
                            int rout = a.deg(ko) - outer_in_deg;
                            long e = static_cast<long>(pout - 1) * rin + static_cast<long>(i - 1) * (pin - 1) +
                                     static_cast<long>(rin) * prefix;
                            Q coeff = c * co * sign_of(e);
                            if (pass == 1) coeff *= -sign_of(static_cast<long>(pin + rin - 1) * (pout + rout - 1));
                            out.add(ko, coeff);
                        }
                    }
                }
            }
        }
        return out;
    });
}

Cochain operator+(const Cochain& f, const Cochain& g) {
    return Cochain([f, g](const Word& w) { return f(w) + g(w); });
}

Cochain operator-(const Cochain& f, const Cochain& g) {
    return Cochain([f, g](const Word& w) { return f(w) - g(w); });
}

Cochain scale(const Cochain& f, const Q& c) {
    return Cochain([f, c](const Word& w) { return f(w).scaled(c); });
}

Cochain arity_part(const Cochain& f, int p) {
    return Cochain([f, p](const Word& w) { return static_cast<int>(w.size()) == p ? f(w) : Vec(); });
}

Cochain unit_cochain(const Algebra& a) {
    return Cochain([&a](const Word& w) { return w.empty() ? a.unit() : Vec(); });
}

Cochain identity_cochain() {
    return Cochain([](const Word& w) { return w.size() == 1 ? Vec(w[0]) : Vec(); });
}

Cochain multiplication_cochain(const Algebra& a) {
    return Cochain([&a](const Word& w) { return w.size() == 2 ? a.mul(w[0], w[1]) : Vec(); });
}

Cochain differential_cochain(const Algebra& a) {
    return Cochain([&a](const Word& w) { return w.size() == 1 ? a.d(w[0]) : Vec(); });
}

ValueWindow ValueWindow::of(const Bimodule& m, int bound) {
    ValueWindow v;
    for (const auto& k : m.basis(bound)) v.by_degree[m.deg(k)].push_back(k);
    return v;
}

ValueWindow ValueWindow::of(const Algebra& a, int bound) {
    ValueWindow v;
    for (const auto& k : a.basis(bound)) v.by_degree[a.deg(k)].push_back(k);
    return v;
}

Cochain random_cochain(const Algebra& a, const ValueWindow& values, const std::vector<int>& arities, int r,
                       std::uint64_t seed) {
    auto vals = std::make_shared<ValueWindow>(values);
    return Cochain([&a, vals, arities, r, seed](const Word& w) {
        Vec out;
        if (std::find(arities.begin(), arities.end(), static_cast<int>(w.size())) == arities.end()) return out;
        auto it = vals->by_degree.find(r + word_degree(a, w));
        if (it == vals->by_degree.end()) return out;
        Rng rng(hash_word(seed, w));
        for (const auto& k : it->second)
            if (rng.chance(1, 2)) out.add(k, rng.coeff());
        return out;
    });
}

std::vector<Word> words_of_length(const std::vector<Key>& keys, int p) {
    std::vector<Word> out{Word{}};
    for (int i = 0; i < p; ++i) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (const auto& k : keys) {
                Word x = w;
                x.push_back(k);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<Word> sample_words(const std::vector<Key>& keys, int p, int count, std::uint64_t seed) {
    double total = 1;
    for (int i = 0; i < p; ++i) total *= static_cast<double>(keys.size());
    if (total <= count) return words_of_length(keys, p);
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(p)));
    std::vector<Word> out;
    for (int t = 0; t < count; ++t) {
        Word w;
        for (int i = 0; i < p; ++i) w.push_back(keys[rng.below(static_cast<int>(keys.size()))]);
        out.push_back(std::move(w));
    }
    return out;
}

std::optional<Word> first_difference(const Cochain& f, const Cochain& g, const std::vector<Word>& words) {
    for (const auto& w : words)
        if (f(w) != g(w)) return w;
    return std::nullopt;
}

Key encode_cochain_key(const Word& w, const Key& out) {
    Key k{static_cast<int>(w.size())};
    for (const auto& a : w) {
        k.push_back(static_cast<int>(a.size()));
        k.insert(k.end(), a.begin(), a.end());
    }
    k.push_back(static_cast<int>(out.size()));
    k.insert(k.end(), out.begin(), out.end());
    return k;
}

std::pair<Word, Key> decode_cochain_key(const Key& k) {
    std::size_t pos = 0;
    int p = k.at(pos++);
    Word w;
    for (int i = 0; i < p; ++i) {
        int len = k.at(pos++);
        w.emplace_back(k.begin() + static_cast<long>(pos), k.begin() + static_cast<long>(pos) + len);
        pos += len;
    }
    int len = k.at(pos++);
    Key out(k.begin() + static_cast<long>(pos), k.begin() + static_cast<long>(pos) + len);
    return {w, out};
}

Cochain cochain_from_vector(const Vec& v) {
    auto table = std::make_shared<std::map<Word, Vec>>();
    for (const auto& [k, c] : v) {
        auto [w, out] = decode_cochain_key(k);
        (*table)[w].add(out, c);
    }
    return Cochain([table](const Word& w) {
        auto it = table->find(w);
        return it == table->end() ? Vec() : it->second;
    });
}

namespace {

struct CochainSpace {
    std::vector<Key> keys;  // encoded cochain keys
};

// Basis of Hom(A^{⊗p}, A) in total degree n = p + r.
std::vector<Key> cochain_basis(const Algebra& a, int p, int n) {
    auto basis = a.basis(-1);
    std::vector<Key> out;
    for (const auto& w : words_of_length(basis, p)) {
        int target = n - p + word_degree(a, w);
        for (const auto& o : basis)
            if (a.deg(o) == target) out.push_back(encode_cochain_key(w, o));
    }
    return out;
}

// Full differential of a basis cochain as a vector of encoded keys.
Vec differential_column(const Algebra& a, const Bimodule& m, const Key& key) {
    auto [w0, o0] = decode_cochain_key(key);
    Cochain f([w0 = w0, o0 = o0](const Word& w) { return w == w0 ? Vec(o0) : Vec(); });
    Cochain df = hoch_total(a, m, f);
    Vec out;
    auto basis = a.basis(-1);
    for (int len : {static_cast<int>(w0.size()), static_cast<int>(w0.size()) + 1})
        for (const auto& w : words_of_length(basis, len))
            for (const auto& [k, c] : df(w)) out.add(encode_cochain_key(w, k), c);
    return out;
}

int arity_of(const Key& k) { return k.at(0); }

}  // namespace

HochschildTable hoch_cohomology(const Algebra& a, int max_arity, const std::vector<int>& degrees) {
    if (max_arity < 1) throw ContractError("window needs max arity at least 1");
    AlgebraAsBimodule m(std::shared_ptr<const Algebra>(&a, [](const Algebra*) {}));
    HochschildTable table;
    table.window = max_arity;
    for (int n : degrees) {
        KeyedEchelon span;
        // Coboundaries from cochains of degree n−1 whose differential stays inside arity ≤ P−1.
        std::vector<Key> prev;
        for (int p = 0; p < max_arity; ++p)
            for (auto& k : cochain_basis(a, p, n - 1)) prev.push_back(k);
        std::vector<Vec> prev_cols;
        std::map<Key, int> top_rows;
        ColumnMatrix top;
        for (const auto& k : prev) {
            Vec col = differential_column(a, m, k);
            SparseRow r;
            for (const auto& [t, c] : col)
                if (arity_of(t) == max_arity) r.emplace(top_rows.try_emplace(t, static_cast<int>(top_rows.size())).first->second, c);
            top.cols.push_back(std::move(r));
            prev_cols.push_back(std::move(col));
        }
        top.rows = static_cast<int>(top_rows.size());
        for (const auto& v : matrix_kernel(top)) {
            Vec image;
            for (const auto& [j, c] : v) image.add(prev_cols[j], c);
            span.add(image);
        }
        // Cocycles of degree n in arity ≤ P−1.
        std::vector<Key> cur;
        for (int p = 0; p < max_arity; ++p)
            for (auto& k : cochain_basis(a, p, n)) cur.push_back(k);
        std::map<Key, int> rows;
        ColumnMatrix dmat;
        for (const auto& k : cur) {
            SparseRow r;
            for (const auto& [t, c] : differential_column(a, m, k))
                r.emplace(rows.try_emplace(t, static_cast<int>(rows.size())).first->second, c);
            dmat.cols.push_back(std::move(r));
        }
        dmat.rows = static_cast<int>(rows.size());
        std::vector<Vec> reps;
        for (const auto& v : matrix_kernel(dmat)) {
            Vec z;
            for (const auto& [j, c] : v) z.add(cur[j], c);
            if (span.add(z)) reps.push_back(z);
        }
        table.dimension[n] = static_cast<int>(reps.size());
        table.representatives[n] = std::move(reps);
    }
    return table;
}

}  // namespace hk
