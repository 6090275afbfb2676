#include "hochkit/duflo.hpp"

#include <gtest/gtest.h>

using namespace hk;

namespace {

// sl2 in the order e, f, h.
constexpr int E = 0, F = 1, H = 2;

Vec casimir_sym() {
    Vec p;
    p.add(Key{E, F}, 2);
    p.add(Key{H, H}, Q(1, 2));
    return p;
}

bool x_part_zero(const KellerTriple& kt, const XCochain& f, int max_p, int max_q, std::string* where) {
    std::vector<Key> xs;
    for (const auto& u : kt.ug->basis(1))
        for (const auto& x : kt.sym->basis(-1)) xs.push_back(KellerX::make(u, x));
    for (int p = 0; p <= max_p; ++p)
        for (const auto& aw : words_of_length(kt.ug->basis(1), p))
            for (int q = 0; q <= max_q; ++q)
                for (const auto& bw : words_of_length(kt.dual->basis(-1), q))
                    for (const auto& x : xs)
                        if (!f(aw, x, bw).is_zero()) {
                            *where = word_string(aw) + " " + key_string(x) + " " + word_string(bw);
                            return false;
                        }
    return true;
}

}  // namespace

TEST(Duflo, LogCoefficients) {
    auto c = log_duflo_coefficients(4);
    EXPECT_EQ(c[1], Q(-1, 2));
    EXPECT_EQ(c[2], Q(1, 24));
    EXPECT_EQ(c[3], Q(0));
}

TEST(Duflo, SeriesOracles) {
    EXPECT_EQ(duflo_series(LieAlgebra::abelian(3), 4).j, Series(Key{}));
    auto heis = duflo_series(LieAlgebra::heisenberg(), 6);
    EXPECT_EQ(heis.j, Series(Key{}));
    EXPECT_EQ(heis.j_sqrt, Series(Key{}));
    // tr(ad_x²) for x = a e + b f + c h is 8ab + 8c².
    auto sl = duflo_series(LieAlgebra::sl2(), 4);
    Series quad;
    for (const auto& [k, c] : sl.log_j)
        if (k.size() == 2) quad.add(k, c);
    Series killing;
    killing.add(Key{E, F}, 8);
    killing.add(Key{H, H}, 8);
    EXPECT_EQ(quad, killing.scaled(Q(1, 24)));
}

TEST(Duflo, SquareRootAndInvariance) {
    for (const auto& g : {LieAlgebra::aff1(), LieAlgebra::sl2(), LieAlgebra::heisenberg()}) {
        auto s = duflo_series(g, 6);
        EXPECT_EQ(series_mul(s.j_sqrt, s.j_sqrt, 6), s.j) << g.name();
        EXPECT_TRUE(is_invariant(g, s.j)) << g.name();
        EXPECT_TRUE(is_invariant(g, s.j_sqrt)) << g.name();
    }
}

TEST(Duflo, ToddMatchesDuflo) {
    auto aff_at = atiyah_cocycle(LieAlgebra::aff1());
    EXPECT_EQ(aff_at.at({0, 1}), Vec(Key{1}));
    EXPECT_TRUE(atiyah_cocycle(LieAlgebra::abelian(2)).empty());
    EXPECT_EQ(todd_series(LieAlgebra::abelian(2), 4), Series(Key{}));
    for (const auto& g : {LieAlgebra::aff1(), LieAlgebra::sl2(), LieAlgebra::heisenberg()})
        EXPECT_EQ(todd_series(g, 4), duflo_series(g, 4).j) << g.name();
}

TEST(Duflo, PbwFixtures) {
    Enveloping ug(LieAlgebra::sl2());
    Vec expected(Key{E, F});
    expected.add(Key{H}, Q(-1, 2));
    EXPECT_EQ(pbw(ug, Vec(Key{E, F})), expected);
    EXPECT_EQ(pbw(ug, Vec(Key{H})), Vec(Key{H}));
    // Equivariance for the adjoint actions.
    LieAlgebra g = LieAlgebra::sl2();
    for (const auto& m : SymEven(3).basis(3))
        for (int i = 0; i < 3; ++i) {
            Vec lhs = pbw(ug, sg_action(g, i, m));
            Vec rhs;
            for (const auto& [u, c] : pbw(ug, Vec(m))) rhs.add(ug_adjoint(ug, i, u), c);
            EXPECT_EQ(lhs, rhs) << key_string(m);
        }
}

TEST(Duflo, ContractionOnCasimir) {
    auto s = duflo_series(LieAlgebra::sl2(), 4);
    Vec p = casimir_sym();
    EXPECT_EQ(series_contraction(s.j_sqrt, p), p + Vec(Key{}, Q(1, 2)));
    EXPECT_EQ(series_contraction(Series(Key{}), p), p);
    Vec low(Key{});
    low.add(Key{H}, 3);
    EXPECT_EQ(series_contraction(s.j_sqrt, low), low);
}

TEST(Duflo, PhiTIsAMultiplicativeChainIsomorphism) {
    LieAlgebra g = LieAlgebra::aff1();
    DualOdd dual(g);
    OddSym sym(g);
    SymEven sg(g.dim());
    auto smul = [&sg](const Vec& a, const Vec& b) { return sg.mul(a, b); };
    Vec one(polyvector_key({}, {}));
    EXPECT_EQ(phi_t(one)(Key{}), Vec(Key{}));
    EXPECT_TRUE(phi_t(one)(Key{0}).is_zero());
    for (int trial = 0; trial < 50; ++trial) {
        int n1 = trial % 3, n2 = (trial / 3) % 3;
        Vec s = random_polyvector(2, n1, 2, mix_seed(7, trial));
        Vec t = random_polyvector(2, n2, 2, mix_seed(8, trial));
        EXPECT_EQ(phi_t_inverse(2, phi_t(s)), s);
        CeCochain lhs = phi_t(polyvector_product(dual, s, t));
        CeCochain rhs = convolution(sym, smul, phi_t(s), phi_t(t));
        for (const auto& y : sym.basis(-1)) EXPECT_EQ(lhs(y), rhs(y)) << trial << " " << key_string(y);
        // d_T is a square-zero derivation that restricts to d_g on functions.
        EXPECT_TRUE(d_t(g, d_t(g, s)).is_zero());
        Vec leibniz = d_t(g, polyvector_product(dual, s, t));
        Vec expected = polyvector_product(dual, d_t(g, s), t);
        expected.add(polyvector_product(dual, s, d_t(g, t)), sign_of(n1));
        EXPECT_EQ(leibniz, expected) << trial;
    }
    for (const auto& xi : dual.basis(-1)) {
        Vec expected;
        for (const auto& [k, c] : dual.d(xi)) expected.add(polyvector_key(k, {}), c);
        EXPECT_EQ(d_t(g, Vec(polyvector_key(xi, {}))), expected) << key_string(xi);
    }
}

TEST(Duflo, Phi2IsAMultiplicativeChainMap) {
    LieAlgebra g = LieAlgebra::aff1();
    auto ug = std::make_shared<Enveloping>(g);
    AlgebraAsBimodule self(ug);
    OddSym sym(g);
    CeModule m = ce_module("ug", g, ug);
    auto umul = [&ug](const Vec& a, const Vec& b) { return ug->mul(a, b); };
    ValueWindow vals = ValueWindow::of(*ug, 2);
    EXPECT_EQ(phi2_tilde(unit_cochain(*ug))(Key{}), Vec(Key{}));
    for (int trial = 0; trial < 50; ++trial) {
        int p1 = trial % 2, p2 = (trial / 2) % 2;
        Cochain f = random_cochain(*ug, vals, {p1}, 0, mix_seed(11, trial));
        Cochain h = random_cochain(*ug, vals, {p2}, 0, mix_seed(12, trial));
        CeCochain df = phi2_tilde(hoch_total(*ug, self, f));
        CeCochain ce = ce_d(g, m, phi2_tilde(f));
        CeCochain prod = phi2_tilde(cup(*ug, f, h));
        CeCochain conv = convolution(sym, umul, phi2_tilde(f), phi2_tilde(h));
        for (const auto& y : sym.basis(-1)) {
            EXPECT_EQ(df(y), ce(y)) << trial << " " << key_string(y);
            EXPECT_EQ(prod(y), conv(y)) << trial << " " << key_string(y);
        }
        if (p1 == 1) EXPECT_EQ(phi2_tilde(f)(Key{1}), f(Word{Key{1}}));
    }
}

TEST(Duflo, HkrIsAChainMap) {
    LieAlgebra g = LieAlgebra::aff1();
    auto dual = std::make_shared<DualOdd>(g);
    AlgebraAsBimodule self(dual);
    Vec f(Key{1, 0});
    Vec t0(polyvector_key({1, 0}, {}));
    EXPECT_EQ(hkr(*dual, t0)(Word{}), f);
    // q = 1: hkr(ξ ⊗ se₁)(ε¹) = ξ ⊙ ι_{e₁}ε¹ = −ξ, the sign coming from |e₁||ε¹| = −1.
    Vec t1(polyvector_key({1}, {0}));
    EXPECT_EQ(hkr(*dual, t1)(Word{Key{0}}), Vec(Key{1}, -1));
    for (int trial = 0; trial < 50; ++trial) {
        Vec t = random_polyvector(2, trial % 3, 2, mix_seed(21, trial));
        Cochain lhs = hoch_total(*dual, self, hkr(*dual, t));
        Cochain rhs = hkr(*dual, d_t(g, t));
        for (const auto& w : sample_words(dual->basis(-1), 1 + trial % 3, 20, mix_seed(22, trial)))
            EXPECT_EQ(lhs(w), rhs(w)) << trial << " " << word_string(w);
    }
}

TEST(Duflo, PullbackDifferential) {
    KellerTriple kt = build_triple(LieAlgebra::aff1());
    Vec t = random_polyvector(2, 1, 2, 5);
    PullbackElement only_t{Cochain(), XCochain(), t, 0};
    PullbackElement d1 = pullback_d(kt, only_t);
    XCochain expected = kt.trio->d_xb(hkr(*kt.dual, t));
    std::string where;
    EXPECT_TRUE(x_part_zero(kt, d1.x - expected, 1, 2, &where)) << where;
    EXPECT_EQ(d1.t, d_t(kt.g, t));
    Cochain fa = random_cochain(*kt.ug, ValueWindow::of(*kt.ug, 2), {1}, 0, 9);
    PullbackElement only_a{fa, XCochain(), Vec(), 0};
    PullbackElement d2 = pullback_d(kt, only_a);
    EXPECT_TRUE(x_part_zero(kt, d2.x - kt.trio->d_ax(fa), 1, 1, &where)) << where;
    EXPECT_TRUE(d2.t.is_zero());
    for (int trial = 0; trial < 50; ++trial) {
        PullbackElement e = random_pullback(kt, 2, trial % 3, mix_seed(31, trial));
        PullbackElement dd = pullback_d(kt, pullback_d(kt, e));
        EXPECT_TRUE(dd.t.is_zero()) << trial;
        for (const auto& w : sample_words(kt.ug->basis(2), 2 + trial % 2, 10, mix_seed(32, trial)))
            EXPECT_TRUE(dd.a(w).is_zero()) << trial;
        EXPECT_TRUE(x_part_zero(kt, dd.x, 1, 1, &where)) << trial << " " << where;
    }
}

TEST(Duflo, HomotopyFixtures) {
    EXPECT_EQ(homotopy_sign(0, 0, 0), 1);
    EXPECT_EQ(homotopy_sign(0, 1, 0), -1);
    EXPECT_EQ(homotopy_sign(0, 1, 1), -1);
    KellerTriple kt = build_triple(LieAlgebra::aff1());
    XCochain f = random_xcochain(*kt.trio, ValueWindow::of(*kt.x, 2), {{0, 0}}, 0, 3);
    CeCochain h = homotopy_h(kt, f, 0);
    Vec expected;
    for (const auto& [k, c] : f(Word{}, KellerX::make({}, {}), Word{})) {
        auto [u, x] = KellerX::split(k);
        if (x.empty()) expected.add(u, c);
    }
    EXPECT_EQ(h(Key{}), expected);
    PullbackElement pure{random_cochain(*kt.ug, ValueWindow::of(*kt.ug, 2), {1}, 0, 4), XCochain(),
                         random_polyvector(2, 1, 2, 5), 0};
    CeCochain h0 = homotopy_h(kt, pure.x, 3);
    for (const auto& y : kt.sym->basis(-1)) EXPECT_TRUE(h0(y).is_zero());
}

TEST(Duflo, HomotopyIsBasisIndependent) {
    KellerTriple kt = build_triple(LieAlgebra::sl2());
    std::vector<std::vector<Q>> p{{1, 2, 0}, {0, 1, -1}, {3, 0, 1}};
    for (int trial = 0; trial < 3; ++trial) {
        PullbackElement e = random_pullback(kt, 2, 1 + trial, mix_seed(41, trial));
        CeCochain a = homotopy_h(kt, e.x, e.max_q);
        CeCochain b = homotopy_h(kt, e.x, e.max_q, p);
        for (const auto& y : kt.sym->basis(-1)) EXPECT_EQ(a(y), b(y)) << trial << " " << key_string(y);
    }
}

TEST(Duflo, HomotopyIdentity) {
    KellerTriple aff = build_triple(LieAlgebra::aff1());
    for (int trial = 0; trial < 12; ++trial) {
        auto res = homotopy_residual(aff, random_pullback(aff, 3, trial % 4, mix_seed(51, trial)));
        EXPECT_FALSE(res.has_value()) << trial << " " << res->where;
    }
    KellerTriple sl = build_triple(LieAlgebra::sl2());
    for (int trial = 0; trial < 4; ++trial) {
        auto res = homotopy_residual(sl, random_pullback(sl, 2, trial, mix_seed(52, trial)));
        EXPECT_FALSE(res.has_value()) << trial << " " << res->where;
    }
}

TEST(Duflo, HomotopyIdentityIsNontrivial) {
    KellerTriple aff = build_triple(LieAlgebra::aff1());
    int nonzero = 0;
    for (int trial = 0; trial < 12; ++trial) {
        PullbackElement e = random_pullback(aff, 3, trial % 4, mix_seed(51, trial));
        CeCochain a = psi1(e), b = psi2(aff, e);
        for (const auto& y : aff.sym->basis(-1))
            if (a(y) != b(y)) ++nonzero;
    }
    EXPECT_GE(nonzero, 6);
}

TEST(Duflo, MutatedSignBreaksTheIdentity) {
    // Each of the three recursions for sgn(p, q, r) is needed.
    KellerTriple aff = build_triple(LieAlgebra::aff1());
    std::vector<SignRule> wrong{
        [](int p, int q, int r) { return homotopy_sign(p, q, r) * sign_of(p); },
        [](int p, int q, int r) { return homotopy_sign(p, q, r) * sign_of(q); },
        [](int p, int q, int r) { return homotopy_sign(p, q, r) * sign_of(r); },
    };
    for (std::size_t i = 0; i < wrong.size(); ++i) {
        bool caught = false;
        for (int trial = 0; trial < 12 && !caught; ++trial)
            caught = homotopy_residual(aff, random_pullback(aff, 3, trial % 4, mix_seed(51, trial)), wrong[i]).has_value();
        EXPECT_TRUE(caught) << i;
    }
}

TEST(Duflo, TheoremB) {
    auto rep = theorem_b_check(LieAlgebra::sl2(), 4, 4);
    EXPECT_TRUE(rep.multiplicative);
    EXPECT_TRUE(rep.plain_fails);
    EXPECT_TRUE(rep.h0_agree) << (rep.notes.empty() ? "" : rep.notes.front());
    EXPECT_TRUE(rep.h1_agree);
    EXPECT_FALSE(rep.plain_witness.is_zero());
}

TEST(Duflo, TheoremBAbelian) {
    // Both routes reduce to the identity on Sg = Ug, and plain pbw is already multiplicative.
    auto rep = theorem_b_check(LieAlgebra::abelian(2), 4, 4);
    EXPECT_TRUE(rep.multiplicative);
    EXPECT_FALSE(rep.plain_fails);
    EXPECT_TRUE(rep.h0_agree) << (rep.notes.empty() ? "" : rep.notes.front());
}

TEST(Duflo, DegreeZeroLiftOfCasimir) {
    // The lift of 1 ⊗ p has A-part pbw(p) = ef + fe + h²/2.
    KellerTriple kt = build_triple(LieAlgebra::sl2());
    Vec t;
    for (const auto& [k, c] : casimir_sym()) t.add(polyvector_key({}, k), c);
    auto u = lift_degree_zero(kt, t, 2, 1);
    ASSERT_TRUE(u.has_value());
    Vec casimir;
    casimir.add(Key{E, F}, 2);
    casimir.add(Key{H}, -1);
    casimir.add(Key{H, H}, Q(1, 2));
    EXPECT_EQ(*u, casimir);
}
