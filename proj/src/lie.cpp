#include "hochkit/lie.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hk {

namespace {

bool all_odd(int) { return true; }

Key without(const Key& x, std::size_t i) {
    Key out;
    out.reserve(x.size() - 1);
    for (std::size_t j = 0; j < x.size(); ++j)
        if (j != i) out.push_back(x[j]);
    return out;
}

Key concat(const Key& a, const Key& b) {
    Key out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void add_scaled(std::map<int, Q>& into, const std::map<int, Q>& v, const Q& c) {
    for (const auto& [k, x] : v) {
        Q n = into[k] + c * x;
        if (sgn(n) == 0)
            into.erase(k);
        else
            into[k] = n;
    }
}

// ∂_g on a strictly increasing key of S(g[1]).
Vec odd_boundary(const LieAlgebra& g, const Key& x) {
    Vec out;
    int n = static_cast<int>(x.size());
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const auto& br = g.bracket(x[p], x[q]);
            if (br.empty()) continue;
            Key rest;
            for (int j = 0; j < n; ++j)
                if (j != p && j != q) rest.push_back(x[j]);
            int s = sign_of((p + 1) + (q + 1));
            for (const auto& [k, c] : br) {
                Key w = concat(Key{k}, rest);
                int ks = koszul_sort(w, all_odd);
                if (ks == 0) continue;
                out.add(w, c * s * ks);
            }
        }
    }
    return out;
}

std::vector<Key> all_subsets(int d, int max_size) {
    std::vector<Key> out;
    for (int k = 0; k <= d && (max_size < 0 || k <= max_size); ++k)
        for (auto& s : subsets_of_size(d, k)) out.push_back(s);
    return out;
}

void multisets(int dim, int len, int start, Key& cur, std::vector<Key>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < dim; ++i) {
        cur.push_back(i);
        multisets(dim, len, i, cur, out);
        cur.pop_back();
    }
}

std::vector<Key> multisets_up_to(int dim, int max_len) {
    std::vector<Key> out;
    for (int l = 0; l <= max_len; ++l) {
        Key cur;
        multisets(dim, l, 0, cur, out);
    }
    return out;
}

// Kernel of the family of maps m ↦ (action(i, m))_i on the given keys.
std::vector<Vec> joint_kernel(const std::vector<Key>& keys, int count, const std::function<Vec(int, const Key&)>& action) {
    std::map<std::pair<int, Key>, int> rows;
    ColumnMatrix m;
    for (const auto& k : keys) {
        SparseRow col;
        for (int i = 0; i < count; ++i)
            for (const auto& [t, c] : action(i, k)) {
                auto it = rows.try_emplace({i, t}, static_cast<int>(rows.size())).first;
                col.emplace(it->second, c);
            }
        m.cols.push_back(std::move(col));
    }
    m.rows = static_cast<int>(rows.size());
    std::vector<Vec> out;
    for (const auto& v : matrix_kernel(m)) {
        Vec w;
        for (const auto& [j, c] : v) w.add(keys[j], c);
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, int dim)
    : name_(std::move(name)), dim_(dim), c_(dim, std::vector<std::map<int, Q>>(dim)) {
    if (dim < 0) throw ContractError("negative dimension");
}

void LieAlgebra::set_bracket_raw(int i, int j, const std::map<int, Q>& coeffs) {
    std::map<int, Q> clean;
    for (const auto& [k, c] : coeffs) {
        if (k < 0 || k >= dim_) throw ContractError("bracket index out of range");
        if (sgn(c) != 0) clean.emplace(k, c);
    }
    c_.at(i).at(j) = std::move(clean);
}

void LieAlgebra::set_bracket(int i, int j, const std::map<int, Q>& coeffs) {
    set_bracket_raw(i, j, coeffs);
    std::map<int, Q> neg;
    for (const auto& [k, c] : c_[i][j]) neg.emplace(k, -c);
    if (i != j) c_.at(j).at(i) = std::move(neg);
}

Q LieAlgebra::structure_constant(int i, int j, int k) const {
    const auto& b = c_.at(i).at(j);
    auto it = b.find(k);
    return it == b.end() ? Q(0) : it->second;
}

bool LieAlgebra::is_abelian() const {
    for (const auto& row : c_)
        for (const auto& b : row)
            if (!b.empty()) return false;
    return true;
}

LieAlgebra::Report LieAlgebra::validate() const {
    Report r;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            std::map<int, Q> s = c_[i][j];
            add_scaled(s, c_[j][i], 1);
            if (!s.empty()) r.violations.push_back({i, j, -1});
        }
    auto br = [&](const std::map<int, Q>& a, int k) {
        std::map<int, Q> out;
        for (const auto& [m, c] : a) add_scaled(out, c_[m][k], c);
        return out;
    };
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                std::map<int, Q> jac = br(c_[i][j], k);
                add_scaled(jac, br(c_[j][k], i), 1);
                add_scaled(jac, br(c_[k][i], j), 1);
                if (!jac.empty()) r.violations.push_back({i, j, k});
            }
    r.ok = r.violations.empty();
    return r;
}

std::string LieAlgebra::Report::describe() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        const auto& v = violations[i];
        os << (i ? "; " : "");
        if (v[2] < 0)
            os << "antisymmetry fails at (" << v[0] << "," << v[1] << ")";
        else
            os << "Jacobi fails at (" << v[0] << "," << v[1] << "," << v[2] << ")";
    }
    return os.str();
}

LieAlgebra LieAlgebra::abelian(int d) { return LieAlgebra("abelian" + std::to_string(d), d); }

LieAlgebra LieAlgebra::aff1() {
    LieAlgebra g("aff1", 2);
    g.set_bracket(0, 1, {{1, 1}});
    return g;
}

LieAlgebra LieAlgebra::sl2() {
    LieAlgebra g("sl2", 3);
    g.set_bracket(2, 0, {{0, 2}});
    g.set_bracket(2, 1, {{1, -2}});
    g.set_bracket(0, 1, {{2, 1}});
    return g;
}

LieAlgebra LieAlgebra::heisenberg() {
    LieAlgebra g("heisenberg", 3);
    g.set_bracket(0, 1, {{2, 1}});
    return g;
}

LieAlgebra LieAlgebra::from_json_text(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    LieAlgebra g(j.value("name", std::string("unnamed")), j.at("dimension").get<int>());
    std::map<std::pair<int, int>, std::map<int, Q>> given;
    for (const auto& b : j.value("brackets", nlohmann::json::array())) {
        int i = b.at("i").get<int>(), jj = b.at("j").get<int>();
        if (i < 0 || jj < 0 || i >= g.dim() || jj >= g.dim()) throw ContractError("bracket index out of range");
        std::map<int, Q> coeffs;
        for (const auto& [k, v] : b.at("coeffs").items()) {
            Q c = v.is_string() ? parse_rational(v.get<std::string>()) : Q(v.get<long>());
            coeffs[std::stoi(k)] += c;
        }
        given[{i, jj}] = coeffs;
    }
    for (const auto& [ij, coeffs] : given) g.set_bracket_raw(ij.first, ij.second, coeffs);
    for (const auto& [ij, coeffs] : given) {
        if (ij.first == ij.second || given.count({ij.second, ij.first})) continue;
        std::map<int, Q> neg;
        for (const auto& [k, c] : coeffs) neg.emplace(k, -c);
        g.set_bracket_raw(ij.second, ij.first, neg);
    }
    return g;
}

LieAlgebra LieAlgebra::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string LieAlgebra::to_json_text() const {
    nlohmann::json j;
    j["name"] = name_;
    j["dimension"] = dim_;
    j["brackets"] = nlohmann::json::array();
    for (int i = 0; i < dim_; ++i)
        for (int k = i + 1; k < dim_; ++k) {
            if (c_[i][k].empty()) continue;
            nlohmann::json coeffs = nlohmann::json::object();
            for (const auto& [m, c] : c_[i][k]) coeffs[std::to_string(m)] = q_string(c);
            j["brackets"].push_back({{"i", i}, {"j", k}, {"coeffs", coeffs}});
        }
    return j.dump(2);
}

Vec Enveloping::normal_form(const Key& word) const {
    std::size_t i = 0;
    while (i + 1 < word.size() && word[i] <= word[i + 1]) ++i;
    if (i + 1 >= word.size()) return Vec(word);
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;
    Key swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    Vec out = normal_form(swapped);
    for (const auto& [k, c] : g_.bracket(word[i], word[i + 1])) {
        Key shorter(word.begin(), word.begin() + static_cast<long>(i));
        shorter.push_back(k);
        shorter.insert(shorter.end(), word.begin() + static_cast<long>(i) + 2, word.end());
        out.add(normal_form(shorter), c);
    }
    memo_.emplace(word, out);
    return out;
}

Vec Enveloping::mul(const Key& a, const Key& b) const { return normal_form(concat(a, b)); }

std::vector<Key> Enveloping::basis(int bound) const { return multisets_up_to(g_.dim(), bound); }

std::string Enveloping::show(const Key& k) const {
    if (k.empty()) return "1";
    std::string s;
    for (int i : k) s += "e" + std::to_string(i + 1);
    return s;
}

int Enveloping::filtration(const Vec& v) {
    int m = 0;
    for (const auto& [k, c] : v) m = std::max(m, static_cast<int>(k.size()));
    return m;
}

Vec OddSym::mul(const Key& a, const Key& b) const {
    Key w = concat(a, b);
    int s = koszul_sort(w, all_odd);
    if (s == 0) return {};
    return Vec(w, s);
}

std::vector<Key> OddSym::basis(int bound) const { return all_subsets(g_.dim(), bound); }

Vec OddSym::boundary(const Key& x) const { return odd_boundary(g_, x); }

Vec OddSym::boundary(const Vec& v) const { return apply_linear(v, [this](const Key& k) { return boundary(k); }); }

TVec OddSym::coproduct(const Key& x) const {
    TVec out;
    int n = static_cast<int>(x.size());
    std::vector<int> degrees(n, -1);
    for (int k = 0; k <= n; ++k) {
        for (const auto& idx : subsets_of_size(n, k)) {
            std::vector<int> perm = idx;
            Key left, right;
            std::vector<bool> used(n, false);
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

Vec OddSym::contract(const Key& x, const Key& xi) const {
    Vec cur(x);
    for (int j : xi) {
        Vec next;
        for (const auto& [k, c] : cur) {
            int n = static_cast<int>(k.size());
            for (int i = 0; i < n; ++i)
                if (k[i] == j) next.add(without(k, i), -c * sign_of(n - (i + 1)));
        }
        cur = std::move(next);
        if (cur.is_zero()) break;
    }
    return cur;
}

Vec OddSym::contract(const Vec& x, const Vec& xi) const {
    Vec out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : xi) out.add(contract(a, b), ca * cb);
    return out;
}

Key OddSym::top() const {
    Key k(g_.dim());
    for (int i = 0; i < g_.dim(); ++i) k[i] = i;
    return k;
}

DualOdd::DualOdd(LieAlgebra g) : g_(std::move(g)) {
    for (const auto& y : all_subsets(g_.dim(), -1)) {
        for (const auto& [z, c] : odd_boundary(g_, y)) {
            Key xi = dual_of(z);
            int dxi = static_cast<int>(xi.size());
            dg_[xi].add(dual_of(y), -c * sign_of(dxi));
        }
    }
}

Vec DualOdd::mul(const Key& a, const Key& b) const {
    Key w = concat(a, b);
    int s = koszul_sort(w, all_odd, true);
    if (s == 0) return {};
    return Vec(w, s);
}

Vec DualOdd::d(const Key& k) const {
    auto it = dg_.find(k);
    return it == dg_.end() ? Vec() : it->second;
}

std::vector<Key> DualOdd::basis(int bound) const {
    std::vector<Key> out;
    for (const auto& s : all_subsets(g_.dim(), bound)) out.push_back(dual_of(s));
    return out;
}

Vec DualOdd::contract(const Key& xi, const Key& x) const {
    Vec cur(xi);
    for (int j : x) {
        Vec next;
        for (const auto& [k, c] : cur) {
            int n = static_cast<int>(k.size());
            for (int i = 0; i < n; ++i)
                if (k[i] == j) next.add(without(k, i), c * sign_of(n - (i + 1)));
        }
        cur = std::move(next);
        if (cur.is_zero()) break;
    }
    return cur;
}

Vec DualOdd::contract(const Vec& xi, const Vec& x) const {
    Vec out;
    for (const auto& [a, ca] : xi)
        for (const auto& [b, cb] : x) out.add(contract(a, b), ca * cb);
    return out;
}

Key DualOdd::top() const {
    Key k(g_.dim());
    for (int i = 0; i < g_.dim(); ++i) k[i] = g_.dim() - 1 - i;
    return k;
}

Vec SymEven::mul(const Key& a, const Key& b) const {
    Key w = concat(a, b);
    std::sort(w.begin(), w.end());
    return Vec(w);
}

std::vector<Key> SymEven::basis(int bound) const { return multisets_up_to(dim_, bound); }

std::vector<Key> SymEven::homogeneous(int degree) const {
    std::vector<Key> out;
    Key cur;
    multisets(dim_, degree, 0, cur, out);
    return out;
}

Q pair_dual(const Key& xi, const Key& x) {
    if (xi.size() != x.size()) return 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (xi[i] != x[x.size() - 1 - i]) return 0;
    return 1;
}

Q pair_flip(const Key& x, const Key& xi) {
    long n = static_cast<long>(x.size());
    return pair_dual(xi, x) * sign_of(n * static_cast<long>(xi.size()));
}

Q pair_dual(const Vec& xi, const Vec& x) {
    Q s = 0;
    for (const auto& [a, ca] : xi)
        for (const auto& [b, cb] : x) s += ca * cb * pair_dual(a, b);
    return s;
}

Q pair_flip(const Vec& x, const Vec& xi) {
    Q s = 0;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : xi) s += ca * cb * pair_flip(a, b);
    return s;
}

Vec sg_action(const LieAlgebra& g, int i, const Key& m) {
    Vec out;
    for (std::size_t p = 0; p < m.size(); ++p)
        for (const auto& [k, c] : g.bracket(i, m[p])) {
            Key w = m;
            w[p] = k;
            std::sort(w.begin(), w.end());
            out.add(w, c);
        }
    return out;
}

Vec ug_adjoint(const Enveloping& ug, int i, const Key& u) {
    Vec out = ug.mul(Key{i}, u);
    out.add(ug.mul(u, Key{i}), -1);
    return out;
}

CeModule ce_module(const std::string& tag, const LieAlgebra& g, std::shared_ptr<const Enveloping> ug) {
    CeModule m;
    m.tag = tag;
    m.deg = [](const Key&) { return 0; };
    if (tag == "trivial") {
        m.act = [](int, const Key&) { return Vec(); };
    } else if (tag == "sg") {
        m.act = [g](int i, const Key& k) { return sg_action(g, i, k); };
    } else if (tag == "ug") {
        if (!ug) ug = std::make_shared<Enveloping>(g);
        m.act = [ug](int i, const Key& k) { return ug_adjoint(*ug, i, k); };
    } else {
        throw ContractError("unknown module tag: " + tag);
    }
    return m;
}

Vec ce_differential(const LieAlgebra& g, const CeModule& m, const CeCochain& f, const Key& x) {
    Vec out;
    int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i) {
        Vec val = f(without(x, i));
        for (const auto& [k, c] : val) {
            int fdeg = m.deg(k) + (n - 1);
            out.add(m.act(x[i], k), c * sign_of((i + 1) + fdeg));
        }
    }
    if (m.d)
        for (const auto& [k, c] : f(x)) out.add(m.d(k), c);
    for (const auto& [z, cz] : odd_boundary(g, x))
        for (const auto& [k, c] : f(z)) out.add(k, -cz * c * sign_of(m.deg(k) + (n - 1)));
    return out;
}

Vec ce_differential_end(const Enveloping& ug, const EndCochain& f, const Key& x, const Key& u) {
    Vec out;
    int n = static_cast<int>(x.size());
    int fdeg = n - 1;
    for (int i = 0; i < n; ++i) {
        Key xh = without(x, i);
        int s = sign_of((i + 1) + fdeg);
        for (const auto& [uy, c] : ug.mul(u, Key{x[i]})) out.add(f(xh, uy), c * s);
        out.add(ug.mul(f(xh, u), Key{x[i]}), -s);
    }
    for (const auto& [z, cz] : odd_boundary(ug.lie(), x)) out.add(f(z, u), -cz * sign_of(fdeg));
    return out;
}

std::vector<Vec> invariants_basis(const std::string& tag, const LieAlgebra& g, int degree) {
    if (tag == "sg") {
        SymEven s(g.dim());
        return joint_kernel(s.homogeneous(degree), g.dim(), [&](int i, const Key& k) { return sg_action(g, i, k); });
    }
    if (tag == "ug") {
        Enveloping ug(g);
        return joint_kernel(ug.basis(degree), g.dim(), [&](int i, const Key& k) { return ug_adjoint(ug, i, k); });
    }
    throw ContractError("unknown module tag: " + tag);
}

std::vector<int> ce_cohomology(const std::string& tag, const LieAlgebra& g, int bound) {
    int d = g.dim();
    std::vector<Key> values;
    std::shared_ptr<const Enveloping> ug;
    if (tag == "trivial") {
        values = {Key{}};
    } else if (tag == "sg") {
        values = SymEven(d).basis(bound);
    } else if (tag == "ug") {
        ug = std::make_shared<Enveloping>(g);
        values = ug->basis(bound);
    } else {
        throw ContractError("unknown module tag: " + tag);
    }
    CeModule m = ce_module(tag, g, ug);
    // Cochain key: [n, x..., value...].
    std::vector<Key> keys;
    for (const auto& x : all_subsets(d, -1))
        for (const auto& v : values) {
            Key k{static_cast<int>(x.size())};
            k.insert(k.end(), x.begin(), x.end());
            k.insert(k.end(), v.begin(), v.end());
            keys.push_back(k);
        }
    auto space = BasisSpace::make(keys, [](const Key& k) { return k[0]; });
    auto diff = GradedMap::from_function(space, space, 1, [&](const Key& k) {
        int n = k[0];
        Key x0(k.begin() + 1, k.begin() + 1 + n), v0(k.begin() + 1 + n, k.end());
        CeCochain f = [&](const Key& x) { return x == x0 ? Vec(v0) : Vec(); };
        Vec out;
        for (const auto& y : subsets_of_size(d, n + 1))
            for (const auto& [v, c] : ce_differential(g, m, f, y)) {
                Key t{n + 1};
                t.insert(t.end(), y.begin(), y.end());
                t.insert(t.end(), v.begin(), v.end());
                out.add(t, c);
            }
        return out;
    });
    std::vector<int> dims;
    for (int n = 0; n <= d; ++n) dims.push_back(cohomology_slice(diff, diff, n).dimension);
    return dims;
}

}  // namespace hk
