#pragma once

#include "hochkit/core.hpp"

#include <memory>
#include <optional>

namespace hk {

using SparseRow = std::map<int, Q>;

// Incremental row echelon form with integer rows. Elimination is fraction-free:
// rows are cross-multiplied and divided by their content.
class Echelon {
public:
    bool add(const SparseRow& v);
    bool contains(const SparseRow& v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    std::vector<int> pivots() const;
    // Fully reduced rows over Q with unit pivots, ordered by pivot.
    std::vector<SparseRow> rref() const;

private:
    using IntRow = std::map<int, mpz_class>;
    static IntRow to_int(const SparseRow& v);
    IntRow reduce(IntRow v) const;
    std::map<int, IntRow> rows_;
};

// A matrix stored by columns; entries are indexed by row number.
struct ColumnMatrix {
    int rows = 0;
    std::vector<SparseRow> cols;
};

int matrix_rank(const ColumnMatrix& m);
// Basis of {x : m x = 0}, each vector indexed by column number.
std::vector<SparseRow> matrix_kernel(const ColumnMatrix& m);
// Some x with m x = rhs, free variables set to zero.
std::optional<SparseRow> matrix_solve(const ColumnMatrix& m, const SparseRow& rhs);

struct BasisSpace {
    std::vector<Key> keys;
    std::vector<int> degrees;
    std::map<Key, int> index;

    static std::shared_ptr<const BasisSpace> make(std::vector<Key> keys, const std::function<int(const Key&)>& degree);
    int dim() const { return static_cast<int>(keys.size()); }
    bool contains(const Key& k) const { return index.count(k) > 0; }
    int degree_of(const Key& k) const;
    std::vector<Key> slice(int degree) const;
};
using SpacePtr = std::shared_ptr<const BasisSpace>;

class GradedMap {
public:
    GradedMap(SpacePtr source, SpacePtr target, int shift);
    // Builds the map from its action on basis keys; checks target membership and shift.
    static GradedMap from_function(SpacePtr source, SpacePtr target, int shift, const std::function<Vec(const Key&)>& f);
    static GradedMap identity(SpacePtr space);
    static GradedMap zero(SpacePtr source, SpacePtr target, int shift);

    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    int shift() const { return shift_; }
    const Vec& column(const Key& k) const;
    Vec apply(const Vec& v) const;
    bool is_zero() const;
    bool operator==(const GradedMap& o) const;
    void set_column(const Key& k, const Vec& v);
    ColumnMatrix matrix(int degree) const;

private:
    SpacePtr source_, target_;
    int shift_;
    std::map<Key, Vec> columns_;
};

GradedMap compose(const GradedMap& f, const GradedMap& g);
GradedMap add_maps(const GradedMap& f, const GradedMap& g, const Q& c = 1);
std::vector<Vec> kernel_basis(const GradedMap& f, int degree);
int map_rank(const GradedMap& f, int degree);

struct CohomologySlice {
    int dimension = 0;
    std::vector<Vec> representatives;
};
// Cohomology of V --d_in--> W --d_out--> at the degree slice of W.
CohomologySlice cohomology_slice(const GradedMap& d_in, const GradedMap& d_out, int degree);

Vec random_vector(const BasisSpace& space, int degree, std::uint64_t seed);

struct ComplexSlice {
    std::vector<SpacePtr> spaces;
    std::vector<GradedMap> maps;
    bool composable() const;
    bool square_zero() const;
};

// Span utilities on keyed vectors.
class KeyedEchelon {
public:
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    int rank() const { return ech_.rank(); }

private:
    SparseRow encode(const Vec& v, bool grow);
    SparseRow encode_const(const Vec& v, bool& unknown) const;
    std::map<Key, int> ids_;
    Echelon ech_;
};

}  // namespace hk
