#include "hochkit/lie.hpp"

#include <gtest/gtest.h>

using namespace hk;

namespace {

// ⟨ξ, x⟩ summed over permutations of the x-letters with the tensor sign
// (-1)^{Σ_{i<j}|x_i||ξ_j|} and the Koszul sign of the reordering.
Q pairing_oracle(const Key& xi, const Key& x) {
    if (xi.size() != x.size()) return 0;
    int n = static_cast<int>(x.size());
    Q total = 0;
    for (const auto& perm : all_permutations(n)) {
        int eps = permutation_sign(perm);
        Q term = eps;
        long e = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e += (-1) * 1;  // |x_i| = -1, |ξ_j| = +1
        term *= sign_of(e);
        for (int i = 0; i < n; ++i)
            if (xi[i] != x[perm[i]]) term = 0;
        total += term;
    }
    return total;
}

// ⟨x, ξ⟩ summed over permutations of the ξ-letters with the tensor sign
// (-1)^{Σ_{i<j}|ξ_i||x_j|} and single-letter values ⟨e_a, ε^a⟩ = -1.
Q flipped_oracle(const Key& x, const Key& xi) {
    if (xi.size() != x.size()) return 0;
    int n = static_cast<int>(x.size());
    Q total = 0;
    for (const auto& perm : all_permutations(n)) {
        Q term = permutation_sign(perm) * sign_of(-static_cast<long>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i) term *= (xi[perm[i]] == x[i]) ? -1 : 0;
        total += term;
    }
    return total;
}

Vec random_odd(int d, std::uint64_t seed) {
    Rng rng(seed);
    Vec v;
    OddSym s(LieAlgebra::abelian(d));
    for (const auto& k : s.basis(-1))
        if (rng.chance(1, 2)) v.add(k, rng.coeff());
    return v;
}

Vec random_dual(int d, std::uint64_t seed) {
    Rng rng(seed);
    Vec v;
    DualOdd s(LieAlgebra::abelian(d));
    for (const auto& k : s.basis(-1))
        if (rng.chance(1, 2)) v.add(k, rng.coeff());
    return v;
}

std::string data(const std::string& f) { return std::string(HOCHKIT_DATA_DIR) + "/" + f; }

}  // namespace

TEST(Lie, ValidateFixtures) {
    EXPECT_TRUE(LieAlgebra::abelian(3).validate().ok);
    EXPECT_TRUE(LieAlgebra::sl2().validate().ok);
    EXPECT_TRUE(LieAlgebra::load(data("sl2.json")).validate().ok);
    EXPECT_TRUE(LieAlgebra::load(data("heisenberg.json")).validate().ok);
    EXPECT_EQ(LieAlgebra::load(data("sl2.json")).dim(), 3);
    auto bad = LieAlgebra::load(data("broken.json")).validate();
    ASSERT_FALSE(bad.ok);
    EXPECT_EQ(bad.violations.front(), (std::array<int, 3>{0, 1, 2}));
}

TEST(Lie, PerturbedSl2FailsJacobi) {
    auto g = LieAlgebra::sl2();
    auto b = g.bracket(1, 2);
    for (int k = 0; k < 3; ++k) b[k] += 1;
    g.set_bracket(1, 2, b);
    auto r = g.validate();
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(r.violations.front(), (std::array<int, 3>{0, 1, 2}));
}

TEST(Lie, JsonRoundTrip) {
    for (const auto& g : {LieAlgebra::sl2(), LieAlgebra::aff1(), LieAlgebra::heisenberg()}) {
        auto h = LieAlgebra::from_json_text(g.to_json_text());
        for (int i = 0; i < g.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j) EXPECT_EQ(g.bracket(i, j), h.bracket(i, j));
    }
}

TEST(Lie, PbwRewriting) {
    Enveloping aff(LieAlgebra::aff1());
    Vec expect = Vec(Key{0, 1}) - Vec(Key{1});
    EXPECT_EQ(aff.mul(Key{1}, Key{0}), expect);
    Enveloping sl(LieAlgebra::sl2());
    EXPECT_EQ(sl.mul(Key{1}, Key{0}), Vec(Key{0, 1}) - Vec(Key{2}));
    EXPECT_EQ(sl.mul(Key{}, Key{0, 2}), Vec(Key{0, 2}));
    Rng rng(5);
    auto basis = sl.basis(2);
    for (int t = 0; t < 30; ++t) {
        Key a = basis[rng.below(basis.size())], b = basis[rng.below(basis.size())], c = basis[rng.below(basis.size())];
        EXPECT_EQ(sl.mul(sl.mul(a, b), Vec(c)), sl.mul(Vec(a), sl.mul(b, c)));
    }
}

TEST(Lie, PairingMatchesOracle) {
    OddSym s(LieAlgebra::abelian(4));
    DualOdd b(LieAlgebra::abelian(4));
    for (const auto& x : s.basis(-1))
        for (const auto& xi : b.basis(-1)) EXPECT_EQ(pair_dual(xi, x), pairing_oracle(xi, x));
    EXPECT_EQ(pair_dual(Key{0}, Key{0}), 1);
    EXPECT_EQ(pair_flip(Key{0}, Key{0}), -1);
    for (const auto& x : s.basis(-1))
        for (const auto& xi : b.basis(-1)) EXPECT_EQ(pair_flip(x, xi), flipped_oracle(x, xi));
    // ⟨e1⊙e2, ε¹⊙ε²⟩ with ε¹⊙ε² = -ε²⊙ε¹.
    EXPECT_EQ(pair_flip(Vec(Key{0, 1}), Vec(Key{1, 0}, -1)), -1);
}

TEST(Lie, ContractionExamples) {
    OddSym s(LieAlgebra::abelian(2));
    EXPECT_TRUE(s.contract(Key{}, Key{0}).is_zero());
    EXPECT_EQ(s.contract(Key{0, 1}, Key{1}), Vec(Key{0}, -1));
    EXPECT_EQ(s.contract(Key{0}, Key{0}), Vec(Key{}, -1));
    DualOdd b(LieAlgebra::abelian(2));
    EXPECT_EQ(b.contract(b.top(), Key{0}), Vec(Key{1}));
    EXPECT_EQ(b.contract(b.top(), Key{1}), Vec(Key{0}, -1));
}

TEST(Lie, ContractionModuleAxiomAndPairing) {
    for (int d = 1; d <= 4; ++d) {
        OddSym s(LieAlgebra::abelian(d));
        DualOdd b(LieAlgebra::abelian(d));
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            Vec x = random_odd(d, seed), xi = random_dual(d, seed + 100), eta = random_dual(d, seed + 200);
            EXPECT_EQ(s.contract(s.contract(x, xi), eta), s.contract(x, b.mul(xi, eta)));
            EXPECT_EQ(pair_flip(s.contract(x, xi), eta), pair_flip(x, b.mul(xi, eta)));
            Vec y = random_odd(d, seed + 300);
            EXPECT_EQ(b.contract(b.contract(xi, x), y), b.contract(xi, s.mul(x, y)));
        }
    }
}

TEST(Lie, BoundarySquaresToZeroIffJacobi) {
    for (const auto& g : {LieAlgebra::aff1(), LieAlgebra::sl2(), LieAlgebra::heisenberg()}) {
        OddSym s(g);
        for (const auto& x : s.basis(-1)) EXPECT_TRUE(s.boundary(s.boundary(Vec(x))).is_zero());
    }
    OddSym bad(LieAlgebra::load(data("broken.json")));
    bool nonzero = false;
    for (const auto& x : bad.basis(-1)) nonzero |= !bad.boundary(bad.boundary(Vec(x))).is_zero();
    EXPECT_TRUE(nonzero);
}

TEST(Lie, ChevalleyEilenbergAlgebraDifferential) {
    DualOdd ab(LieAlgebra::abelian(3));
    for (const auto& k : ab.basis(-1)) EXPECT_TRUE(ab.d(k).is_zero());
    DualOdd aff(LieAlgebra::aff1());
    EXPECT_TRUE(aff.d(Key{0}).is_zero());
    // Frozen fixture: d_g ε² = ε¹⊙ε², stored as -ε²⊙ε¹.
    EXPECT_EQ(aff.d(Key{1}), Vec(Key{1, 0}, -1));
    DualOdd sl(LieAlgebra::sl2());
    for (const auto& k : sl.basis(-1)) EXPECT_TRUE(sl.d(sl.d(Vec(k))).is_zero());
    auto space = BasisSpace::make(sl.basis(-1), [&](const Key& k) { return sl.deg(k); });
    auto d = GradedMap::from_function(space, space, 1, [&](const Key& k) { return sl.d(k); });
    EXPECT_TRUE(kernel_basis(d, 1).empty());
}

TEST(Lie, TrivialCeMatchesAlgebraDifferential) {
    for (const auto& g : {LieAlgebra::aff1(), LieAlgebra::sl2(), LieAlgebra::heisenberg()}) {
        DualOdd b(g);
        OddSym s(g);
        auto m = ce_module("trivial", g);
        for (const auto& xi : b.basis(-1)) {
            CeCochain f = [&](const Key& y) { return Vec(Key{}, pair_dual(xi, y)); };
            for (const auto& y : s.basis(-1)) {
                Q lhs = pair_dual(b.d(Vec(xi)), Vec(y));
                EXPECT_EQ(ce_differential(g, m, f, y).coeff(Key{}), lhs);
            }
        }
    }
}

TEST(Lie, CeDifferentialSquaresToZero) {
    auto g = LieAlgebra::sl2();
    auto ug = std::make_shared<Enveloping>(g);
    OddSym s(g);
    for (const std::string tag : {"sg", "ug"}) {
        auto m = ce_module(tag, g, ug);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            std::vector<Key> vals = tag == "sg" ? SymEven(3).basis(2) : ug->basis(2);
            CeCochain f = [&](const Key& x) {
                Rng rng(hash_key(seed, x));
                Vec v;
                for (const auto& k : vals)
                    if (rng.chance(1, 3)) v.add(k, rng.coeff());
                return v;
            };
            CeCochain df = [&](const Key& x) { return ce_differential(g, m, f, x); };
            for (const auto& x : s.basis(3)) EXPECT_TRUE(ce_differential(g, m, df, x).is_zero());
        }
    }
    EXPECT_THROW(ce_module("bogus", g), ContractError);
}

TEST(Lie, CasimirIsCentral) {
    auto g = LieAlgebra::sl2();
    auto ug = std::make_shared<Enveloping>(g);
    // C = ef + fe + h²/2 in PBW form: 2ef - h + h²/2.
    Vec cas = Vec(Key{0, 1}, 2) - Vec(Key{2}) + Vec(Key{2, 2}, Q(1, 2));
    auto m = ce_module("ug", g, ug);
    CeCochain f = [&](const Key& x) { return x.empty() ? cas : Vec(); };
    for (int i = 0; i < 3; ++i) EXPECT_TRUE(ce_differential(g, m, f, Key{i}).is_zero());
}

TEST(Lie, Invariants) {
    auto sl = LieAlgebra::sl2();
    EXPECT_EQ(invariants_basis("sg", LieAlgebra::abelian(2), 2).size(), 3u);
    EXPECT_EQ(invariants_basis("sg", sl, 2).size(), 1u);
    EXPECT_EQ(invariants_basis("ug", sl, 2).size(), 2u);
    EXPECT_EQ(invariants_basis("sg", sl, 1).size(), 0u);
}

TEST(Lie, CeCohomologySl2) {
    EXPECT_EQ(ce_cohomology("trivial", LieAlgebra::sl2(), 0), (std::vector<int>{1, 0, 0, 1}));
    EXPECT_EQ(ce_cohomology("trivial", LieAlgebra::abelian(2), 0), (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(ce_cohomology("trivial", LieAlgebra::aff1(), 0), (std::vector<int>{1, 1, 0}));
}

TEST(Lie, HomEndCeSquaresToZero) {
    Enveloping ug(LieAlgebra::aff1());
    OddSym s(LieAlgebra::aff1());
    auto basis = ug.basis(2);
    EndCochain f = [&](const Key& x, const Key& u) {
        Rng rng(hash_key(hash_key(9, x), u));
        Vec v;
        for (const auto& k : basis)
            if (rng.chance(1, 3)) v.add(k, rng.coeff());
        return v;
    };
    EndCochain df = [&](const Key& x, const Key& u) { return ce_differential_end(ug, f, x, u); };
    for (const auto& x : s.basis(-1))
        for (const auto& u : ug.basis(2)) EXPECT_TRUE(ce_differential_end(ug, df, x, u).is_zero());
}
