#include "hochkit/linalg.hpp"

#include <gtest/gtest.h>

using namespace hk;

namespace {

SpacePtr graded_space(int n, int degree) {
    std::vector<Key> keys;
    for (int i = 0; i < n; ++i) keys.push_back({i});
    return BasisSpace::make(keys, [degree](const Key&) { return degree; });
}

GradedMap random_map(SpacePtr s, SpacePtr t, std::uint64_t seed, int density = 2) {
    Rng rng(seed);
    return GradedMap::from_function(s, t, t->degrees.empty() ? 0 : t->degrees[0] - s->degrees[0], [&](const Key&) {
        Vec v;
        for (const auto& k : t->keys)
            if (rng.chance(density, 3)) v.add(k, rng.coeff());
        return v;
    });
}

}  // namespace

TEST(Linalg, KernelOfIdentityAndZero) {
    auto s = graded_space(3, 0);
    EXPECT_TRUE(kernel_basis(GradedMap::identity(s), 0).empty());
    EXPECT_EQ(kernel_basis(GradedMap::zero(s, s, 0), 0).size(), 3u);
}

TEST(Linalg, ComposeLaws) {
    auto s = graded_space(4, 0);
    auto f = random_map(s, s, 1);
    EXPECT_TRUE(compose(GradedMap::zero(s, s, 0), f).is_zero());
    EXPECT_EQ(compose(GradedMap::identity(s), f), f);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = random_map(s, s, 3 * seed), b = random_map(s, s, 3 * seed + 1), c = random_map(s, s, 3 * seed + 2);
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    }
}

TEST(Linalg, ShiftIsChecked) {
    auto s = graded_space(2, 0);
    auto t = graded_space(2, 1);
    EXPECT_THROW(GradedMap::from_function(s, t, 0, [](const Key& k) { return Vec(k); }), ContractError);
    EXPECT_NO_THROW(GradedMap::from_function(s, t, 1, [](const Key& k) { return Vec(k); }));
}

TEST(Linalg, CohomologyTrivialCases) {
    auto z = BasisSpace::make({}, [](const Key&) { return 0; });
    auto q = graded_space(1, 0);
    auto id = GradedMap::identity(q);
    EXPECT_EQ(cohomology_slice(id, GradedMap::zero(q, z, 1), 0).dimension, 0);
    auto v = graded_space(5, 0);
    EXPECT_EQ(cohomology_slice(GradedMap::zero(z, v, 0), GradedMap::zero(v, z, 1), 0).dimension, 5);
}

TEST(Linalg, NonSquareZeroIsRejected) {
    auto q = graded_space(1, 0);
    auto id = GradedMap::identity(q);
    EXPECT_THROW(cohomology_slice(id, id, 0), ContractError);
}

TEST(Linalg, RankNullity) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto s = graded_space(6, 0), t = graded_space(5, 0);
        auto f = random_map(s, t, seed, 1);
        EXPECT_EQ(map_rank(f, 0) + static_cast<int>(kernel_basis(f, 0).size()), 6);
        for (const auto& k : kernel_basis(f, 0)) EXPECT_TRUE(f.apply(k).is_zero());
    }
}

TEST(Linalg, SolveAgreesWithApply) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto s = graded_space(4, 0), t = graded_space(6, 0);
        auto f = random_map(s, t, seed + 100);
        Vec x = random_vector(*s, 0, seed);
        Vec y = f.apply(x);
        auto m = f.matrix(0);
        SparseRow rhs;
        for (const auto& [k, c] : y) rhs[t->index.at(k)] = c;
        auto sol = matrix_solve(m, rhs);
        ASSERT_TRUE(sol.has_value());
        Vec back;
        for (const auto& [j, c] : *sol) back.add(f.column(s->keys[j]), c);
        EXPECT_EQ(back, y);
    }
}

TEST(Linalg, RandomVectorDeterminism) {
    auto s = graded_space(5, 2);
    EXPECT_EQ(random_vector(*s, 2, 7), random_vector(*s, 2, 7));
    EXPECT_TRUE(random_vector(*s, 3, 7).is_zero());
    bool dense = false;
    for (std::uint64_t seed = 0; seed < 100; ++seed) dense |= random_vector(*s, 2, seed).size() >= 2;
    EXPECT_TRUE(dense);
}
