#include "hochkit/bimodule.hpp"
#include "hochkit/lie.hpp"

#include <gtest/gtest.h>

using namespace hk;

namespace {

struct SelfTrio {
    std::shared_ptr<DualOdd> alg;
    std::shared_ptr<AlgebraAsBimodule> mod;
    TrioComplex trio;
    ValueWindow values;
    TrioWindow window;

    explicit SelfTrio(const LieAlgebra& g)
        : alg(std::make_shared<DualOdd>(g)), mod(std::make_shared<AlgebraAsBimodule>(alg)), trio(alg, mod, alg),
          values(ValueWindow::of(*alg, -1)) {
        window.a = window.x = window.b = alg->basis(-1);
    }

    TrioCochain random(int r, std::uint64_t seed) const {
        return {random_cochain(*alg, values, {0, 1, 2, 3}, r, seed),
                random_xcochain(trio, values, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}, r, seed + 1),
                random_cochain(*alg, values, {0, 1, 2, 3}, r, seed + 2)};
    }
};

}  // namespace

TEST(Trio, DifferentialAgreesWithAmbient) {
    SelfTrio s(LieAlgebra::aff1());
    auto mod = std::make_shared<AlgebraAsBimodule>(s.trio.ambient_ptr());
    for (int r : {-1, 0, 1}) {
        auto t = s.random(r, 10 + r);
        auto ambient = s.trio.project(hoch_total(s.trio.ambient(), *mod, s.trio.embed(t)));
        auto diff = trio_difference(s.trio.differential(t), ambient, s.window, 40, 3);
        EXPECT_FALSE(diff.has_value()) << "r=" << r << " " << diff->where;
    }
}

namespace {

bool is_zero_trio(const TrioCochain& t, const TrioWindow& w) {
    TrioCochain zero;
    return !trio_difference(t, zero, w, 40, 5).has_value();
}

// A-linear operator cochain on the self trio: f(b)(x) = (-1)^{|x||φ|} x·c(b).
OpCochain a_linear(const SelfTrio& s, const Cochain& c) {
    const DualOdd& alg = *s.alg;
    return [&alg, c](const Word& w, const Key& x) {
        Vec out;
        for (const auto& [k, v] : c(w)) {
            out.add(alg.mul(x, k), v * sign_of(alg.deg(x) * alg.deg(k)));
        }
        return out;
    };
}

// B-linear operator cochain on the self trio: F(w)(x) = c(w)·x.
OpCochain b_linear(const SelfTrio& s, const Cochain& c) {
    const DualOdd& alg = *s.alg;
    return [&alg, c](const Word& w, const Key& x) { return alg.mul(c(w), Vec(x)); };
}

}  // namespace

TEST(Trio, DifferentialIsNontrivialAndSquaresToZero) {
    SelfTrio s(LieAlgebra::aff1());
    auto t = s.random(0, 77);
    auto d = s.trio.differential(t);
    EXPECT_FALSE(is_zero_trio(d, s.window));
    EXPECT_TRUE(is_zero_trio(s.trio.differential(d), s.window));
}

TEST(Trio, ProjectionsAreChainMaps) {
    SelfTrio s(LieAlgebra::aff1());
    AlgebraAsBimodule m(s.alg);
    auto t = s.random(1, 5);
    auto d = s.trio.differential(t);
    auto words = s.trio.ambient_words(s.window, 2, 20, 1);
    std::vector<Word> a_words;
    for (int p = 0; p <= 2; ++p)
        for (auto& w : sample_words(s.window.a, p, 30, 9)) a_words.push_back(w);
    EXPECT_FALSE(first_difference(d.a, hoch_total(*s.alg, m, t.a), a_words).has_value());
    EXPECT_FALSE(first_difference(d.b, hoch_total(*s.alg, m, t.b), a_words).has_value());
}

TEST(Trio, InclusionOfAIsNotAChainMap) {
    SelfTrio s(LieAlgebra::aff1());
    AlgebraAsBimodule m(s.alg);
    auto fa = random_cochain(*s.alg, s.values, {1}, 0, 32);
    ASSERT_FALSE(fa({Key{0}}).is_zero() && fa({Key{1}}).is_zero());
    auto lhs = s.trio.differential(TrioComplex::iota_a(fa));
    auto rhs = TrioComplex::iota_a(hoch_total(*s.alg, m, fa));
    auto diff = trio_difference(lhs, rhs, s.window, 40, 2);
    ASSERT_TRUE(diff.has_value());
    EXPECT_NE(diff->where.find("X-part"), std::string::npos);
}

TEST(Trio, ListedProductsVanish) {
    SelfTrio s(LieAlgebra::aff1());
    auto f = s.random(0, 100);
    auto g = s.random(1, 200);
    TrioCochain fa{f.a, XCochain(), Cochain()}, fx{Cochain(), f.x, Cochain()}, fb{Cochain(), XCochain(), f.b};
    TrioCochain ga{g.a, XCochain(), Cochain()}, gx{Cochain(), g.x, Cochain()}, gb{Cochain(), XCochain(), g.b};
    EXPECT_TRUE(is_zero_trio(s.trio.cup(fa, gb), s.window));
    EXPECT_TRUE(is_zero_trio(s.trio.cup(fx, ga), s.window));
    EXPECT_TRUE(is_zero_trio(s.trio.cup(fx, gx), s.window));
    EXPECT_TRUE(is_zero_trio(s.trio.cup(fb, ga), s.window));
    EXPECT_TRUE(is_zero_trio(s.trio.cup(fb, gx), s.window));
    EXPECT_FALSE(is_zero_trio(s.trio.cup(fa, gx), s.window));
    EXPECT_FALSE(is_zero_trio(s.trio.cup(fx, gb), s.window));
}

TEST(Trio, ProductsStayInsideTheTrio) {
    SelfTrio s(LieAlgebra::aff1());
    auto f = s.random(0, 300);
    auto g = s.random(-1, 400);
    auto mod = std::make_shared<AlgebraAsBimodule>(s.trio.ambient_ptr());
    const auto& amb = s.trio.ambient();
    Cochain ef = s.trio.embed(f), eg = s.trio.embed(g);
    std::vector<Cochain> products{cup(amb, ef, eg), bracket(amb, ef, eg), circ(amb, *mod, ef, eg, 1)};
    for (const auto& prod : products) {
        Cochain round = s.trio.embed(s.trio.project(prod));
        auto words = s.trio.ambient_words(s.window, 3, 30, 4);
        EXPECT_FALSE(first_difference(prod, round, words).has_value());
    }
}

TEST(Trio, PhiIsAChainMap) {
    SelfTrio s(LieAlgebra::aff1());
    for (int r : {-1, 0, 1}) {
        auto F = b_linear(s, random_cochain(*s.alg, s.values, {0, 1, 2}, r, 50 + r));
        const auto& trio = s.trio;
        OpCochain dF = trio.end_total_left(F);
        OpCochain neg = [dF](const Word& w, const Key& x) { return dF(w, x).scaled(Q(-1)); };
        auto diff = x_difference(trio.phi(neg), trio.d_x(trio.phi(F)), s.window, 40, 8);
        EXPECT_FALSE(diff.has_value()) << "r=" << r << " " << diff->where;
    }
}

TEST(Trio, PsiIsAChainMap) {
    SelfTrio s(LieAlgebra::aff1());
    for (int r : {-1, 0, 1}) {
        auto f = a_linear(s, random_cochain(*s.alg, s.values, {0, 1, 2}, r, 60 + r));
        const auto& trio = s.trio;
        OpCochain df = trio.end_total_right(f);
        OpCochain neg = [df](const Word& w, const Key& x) { return df(w, x).scaled(Q(-1)); };
        auto diff = x_difference(trio.psi(neg), trio.d_x(trio.psi(f)), s.window, 40, 8);
        EXPECT_FALSE(diff.has_value()) << "r=" << r << " " << diff->where;
    }
}

TEST(Trio, PhiOfRhoIsTheConnectingMap) {
    SelfTrio s(LieAlgebra::aff1());
    auto fa = random_cochain(*s.alg, s.values, {0, 1, 2}, 0, 71);
    auto diff = x_difference(s.trio.phi(s.trio.rho_a_star(fa)), s.trio.d_ax(fa), s.window, 40, 8);
    EXPECT_FALSE(diff.has_value()) << diff->where;
}

TEST(Trio, LeftPartIsTheConeOfTheConnectingMap) {
    SelfTrio s(LieAlgebra::aff1());
    AlgebraAsBimodule m(s.alg);
    auto t = s.random(0, 90);
    ConePair<Cochain, XCochain> cone{t.a, t.x};
    Cochain d_c = scale(hoch_total(*s.alg, m, cone.c), Q(-1));
    ConePair<Cochain, XCochain> image{scale(d_c, Q(-1)),
                                      s.trio.phi(s.trio.rho_a_star(cone.c)) + s.trio.d_x(cone.d)};
    auto full = s.trio.differential({t.a, t.x, Cochain()});
    auto diff = trio_difference({image.c, image.d, Cochain()}, full, s.window, 40, 6);
    EXPECT_FALSE(diff.has_value()) << diff->where;
}
