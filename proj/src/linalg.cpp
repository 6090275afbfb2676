#include "hochkit/linalg.hpp"

#include <algorithm>

namespace hk {

Echelon::IntRow Echelon::to_int(const SparseRow& v) {
    mpz_class l = 1;
    for (const auto& [i, c] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntRow r;
    for (const auto& [i, c] : v) {
        mpz_class n = c.get_num() * (l / c.get_den());
        if (n != 0) r.emplace(i, n);
    }
    return r;
}

Echelon::IntRow Echelon::reduce(IntRow v) const {
    while (!v.empty()) {
        auto lead = v.begin();
        auto it = rows_.find(lead->first);
        if (it == rows_.end()) break;
        const IntRow& row = it->second;
        mpz_class a = row.begin()->second;
        mpz_class b = lead->second;
        mpz_class g = gcd(a, b);
        mpz_class ma = a / g, mb = b / g;
        IntRow out;
        auto vi = v.begin();
        auto ri = row.begin();
        while (vi != v.end() || ri != row.end()) {
            if (ri == row.end() || (vi != v.end() && vi->first < ri->first)) {
                out.emplace(vi->first, vi->second * ma);
                ++vi;
            } else if (vi == v.end() || ri->first < vi->first) {
                out.emplace(ri->first, -ri->second * mb);
                ++ri;
            } else {
                mpz_class n = vi->second * ma - ri->second * mb;
                if (n != 0) out.emplace(vi->first, n);
                ++vi;
                ++ri;
            }
        }
        mpz_class content = 0;
        for (const auto& [i, c] : out) content = gcd(content, c);
        if (content > 1)
            for (auto& [i, c] : out) c /= content;
        v = std::move(out);
    }
    return v;
}

bool Echelon::add(const SparseRow& v) {
    IntRow r = reduce(to_int(v));
    if (r.empty()) return false;
    int p = r.begin()->first;
    rows_.emplace(p, std::move(r));
    return true;
}

bool Echelon::contains(const SparseRow& v) const { return reduce(to_int(v)).empty(); }

std::vector<int> Echelon::pivots() const {
    std::vector<int> p;
    for (const auto& [k, r] : rows_) p.push_back(k);
    return p;
}

std::vector<SparseRow> Echelon::rref() const {
    std::vector<SparseRow> rows;
    std::vector<int> piv;
    for (const auto& [p, r] : rows_) {
        SparseRow q;
        mpq_class lead(r.begin()->second);
        for (const auto& [i, c] : r) q.emplace(i, mpq_class(c) / lead);
        rows.push_back(std::move(q));
        piv.push_back(p);
    }
    for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
        for (int j = 0; j < i; ++j) {
            auto it = rows[j].find(piv[i]);
            if (it == rows[j].end()) continue;
            Q c = it->second;
            for (const auto& [k, v] : rows[i]) {
                Q nv = rows[j][k] - c * v;
                if (sgn(nv) == 0)
                    rows[j].erase(k);
                else
                    rows[j][k] = nv;
            }
        }
    }
    return rows;
}

namespace {

std::vector<SparseRow> transpose(const ColumnMatrix& m, int extra_col, const SparseRow* rhs) {
    std::vector<SparseRow> rows(m.rows);
    for (int j = 0; j < static_cast<int>(m.cols.size()); ++j)
        for (const auto& [i, c] : m.cols[j]) rows.at(i).emplace(j, c);
    if (rhs)
        for (const auto& [i, c] : *rhs) rows.at(i).emplace(extra_col, c);
    return rows;
}

}  // namespace

int matrix_rank(const ColumnMatrix& m) {
    Echelon e;
    for (const auto& r : transpose(m, 0, nullptr)) e.add(r);
    return e.rank();
}

std::vector<SparseRow> matrix_kernel(const ColumnMatrix& m) {
    Echelon e;
    for (const auto& r : transpose(m, 0, nullptr)) e.add(r);
    auto rref = e.rref();
    std::vector<int> piv = e.pivots();
    std::vector<bool> is_pivot(m.cols.size(), false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<SparseRow> out;
    for (int f = 0; f < static_cast<int>(m.cols.size()); ++f) {
        if (is_pivot[f]) continue;
        SparseRow v;
        v[f] = 1;
        for (std::size_t r = 0; r < rref.size(); ++r) {
            auto it = rref[r].find(f);
            if (it != rref[r].end()) v[piv[r]] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<SparseRow> matrix_solve(const ColumnMatrix& m, const SparseRow& rhs) {
    int n = static_cast<int>(m.cols.size());
    Echelon e;
    for (const auto& r : transpose(m, n, &rhs)) e.add(r);
    auto rref = e.rref();
    std::vector<int> piv = e.pivots();
    SparseRow x;
    for (std::size_t r = 0; r < rref.size(); ++r) {
        if (piv[r] == n) return std::nullopt;
        auto it = rref[r].find(n);
        if (it != rref[r].end()) x[piv[r]] = it->second;
    }
    return x;
}

std::shared_ptr<const BasisSpace> BasisSpace::make(std::vector<Key> keys, const std::function<int(const Key&)>& degree) {
    auto s = std::make_shared<BasisSpace>();
    for (auto& k : keys) {
        if (s->index.count(k)) throw ContractError("duplicate basis key " + key_string(k));
        s->index.emplace(k, static_cast<int>(s->keys.size()));
        s->degrees.push_back(degree(k));
        s->keys.push_back(std::move(k));
    }
    return s;
}

int BasisSpace::degree_of(const Key& k) const {
    auto it = index.find(k);
    if (it == index.end()) throw ContractError("key not in space " + key_string(k));
    return degrees[it->second];
}

std::vector<Key> BasisSpace::slice(int degree) const {
    std::vector<Key> out;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (degrees[i] == degree) out.push_back(keys[i]);
    return out;
}

GradedMap::GradedMap(SpacePtr source, SpacePtr target, int shift)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift) {}

void GradedMap::set_column(const Key& k, const Vec& v) {
    int dk = source_->degree_of(k);
    for (const auto& [t, c] : v) {
        if (!target_->contains(t)) throw ContractError("image leaves target window: " + key_string(t));
        if (target_->degree_of(t) != dk + shift_)
            throw ContractError("column " + key_string(k) + " violates shift at " + key_string(t));
    }
    if (v.is_zero())
        columns_.erase(k);
    else
        columns_[k] = v;
}

GradedMap GradedMap::from_function(SpacePtr source, SpacePtr target, int shift, const std::function<Vec(const Key&)>& f) {
    GradedMap m(source, target, shift);
    for (const auto& k : source->keys) m.set_column(k, f(k));
    return m;
}

GradedMap GradedMap::identity(SpacePtr space) {
    return from_function(space, space, 0, [](const Key& k) { return Vec(k); });
}

GradedMap GradedMap::zero(SpacePtr source, SpacePtr target, int shift) { return GradedMap(source, target, shift); }

const Vec& GradedMap::column(const Key& k) const {
    static const Vec empty;
    auto it = columns_.find(k);
    return it == columns_.end() ? empty : it->second;
}

Vec GradedMap::apply(const Vec& v) const {
    Vec out;
    for (const auto& [k, c] : v) {
        if (!source_->contains(k)) throw ContractError("vector leaves source window");
        out.add(column(k), c);
    }
    return out;
}

bool GradedMap::is_zero() const { return columns_.empty(); }

bool GradedMap::operator==(const GradedMap& o) const {
    return shift_ == o.shift_ && source_->keys == o.source_->keys && target_->keys == o.target_->keys &&
           columns_ == o.columns_;
}

ColumnMatrix GradedMap::matrix(int degree) const {
    ColumnMatrix m;
    m.rows = target_->dim();
    for (const auto& k : source_->slice(degree)) {
        SparseRow col;
        for (const auto& [t, c] : column(k)) col.emplace(target_->index.at(t), c);
        m.cols.push_back(std::move(col));
    }
    return m;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (f.source()->keys != g.target()->keys) throw ContractError("compose: incompatible spaces");
    return GradedMap::from_function(g.source(), f.target(), f.shift() + g.shift(),
                                    [&](const Key& k) { return f.apply(g.column(k)); });
}

GradedMap add_maps(const GradedMap& f, const GradedMap& g, const Q& c) {
    if (f.source()->keys != g.source()->keys || f.target()->keys != g.target()->keys || f.shift() != g.shift())
        throw ContractError("add_maps: incompatible maps");
    return GradedMap::from_function(f.source(), f.target(), f.shift(), [&](const Key& k) {
        Vec v = f.column(k);
        v.add(g.column(k), c);
        return v;
    });
}

std::vector<Vec> kernel_basis(const GradedMap& f, int degree) {
    auto keys = f.source()->slice(degree);
    std::vector<Vec> out;
    for (const auto& v : matrix_kernel(f.matrix(degree))) {
        Vec w;
        for (const auto& [j, c] : v) w.add(keys[j], c);
        out.push_back(std::move(w));
    }
    return out;
}

int map_rank(const GradedMap& f, int degree) { return matrix_rank(f.matrix(degree)); }

CohomologySlice cohomology_slice(const GradedMap& d_in, const GradedMap& d_out, int degree) {
    if (d_in.target()->keys != d_out.source()->keys) throw ContractError("cohomology_slice: incompatible maps");
    auto sq = compose(d_out, d_in);
    for (const auto& k : d_in.source()->slice(degree - d_in.shift()))
        if (!sq.column(k).is_zero()) throw ContractError("cohomology_slice: differential does not square to zero");
    CohomologySlice out;
    KeyedEchelon image;
    for (const auto& k : d_in.source()->slice(degree - d_in.shift())) image.add(d_in.column(k));
    for (const auto& z : kernel_basis(d_out, degree))
        if (image.add(z)) out.representatives.push_back(z);
    out.dimension = static_cast<int>(out.representatives.size());
    return out;
}

Vec random_vector(const BasisSpace& space, int degree, std::uint64_t seed) {
    Vec v;
    auto keys = space.slice(degree);
    if (keys.empty()) return v;
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(degree) + 0x51ed));
    for (const auto& k : keys) v.add(k, rng.coeff());
    return v;
}

bool ComplexSlice::composable() const {
    if (maps.size() + 1 != spaces.size()) return false;
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (maps[i].source()->keys != spaces[i]->keys || maps[i].target()->keys != spaces[i + 1]->keys) return false;
    return true;
}

bool ComplexSlice::square_zero() const {
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (!compose(maps[i + 1], maps[i]).is_zero()) return false;
    return true;
}

SparseRow KeyedEchelon::encode(const Vec& v, bool grow) {
    SparseRow r;
    for (const auto& [k, c] : v) {
        auto it = ids_.find(k);
        if (it == ids_.end()) {
            if (!grow) continue;
            it = ids_.emplace(k, static_cast<int>(ids_.size())).first;
        }
        r.emplace(it->second, c);
    }
    return r;
}

SparseRow KeyedEchelon::encode_const(const Vec& v, bool& unknown) const {
    SparseRow r;
    unknown = false;
    for (const auto& [k, c] : v) {
        auto it = ids_.find(k);
        if (it == ids_.end()) {
            unknown = true;
            return r;
        }
        r.emplace(it->second, c);
    }
    return r;
}

bool KeyedEchelon::add(const Vec& v) { return ech_.add(encode(v, true)); }

bool KeyedEchelon::contains(const Vec& v) const {
    bool unknown = false;
    auto r = encode_const(v, unknown);
    if (unknown) return false;
    return ech_.contains(r);
}

}  // namespace hk
