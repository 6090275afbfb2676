#include "hochkit/keller.hpp"

#include <gtest/gtest.h>

using namespace hk;

namespace {

Vec xvec(const Key& u, const Key& x, const Q& c = 1) { return Vec(KellerX::make(u, x)).scaled(c); }

std::vector<KellerTriple> all_triples() {
    return {build_triple(LieAlgebra::abelian(2)), build_triple(LieAlgebra::aff1()),
            build_triple(LieAlgebra::heisenberg()), build_triple(LieAlgebra::sl2())};
}

}  // namespace

TEST(Keller, DifferentialFixtures) {
    auto ab = build_triple(LieAlgebra::abelian(1));
    EXPECT_EQ(ab.x->d(KellerX::make({0, 0}, {0})), xvec({0, 0, 0}, {}));
    auto aff = build_triple(LieAlgebra::aff1());
    Vec expected = xvec({0}, {1});
    expected.add(xvec({1}, {0}, -1));
    expected.add(xvec({}, {1}, -1));
    EXPECT_EQ(aff.x->d(KellerX::make({}, {0, 1})), expected);
}

TEST(Keller, DifferentialSquaresToZero) {
    for (const auto& t : all_triples())
        for (const auto& m : t.x->basis(3)) EXPECT_TRUE(t.x->d(t.x->d(Vec(m))).is_zero()) << key_string(m);
}

TEST(Keller, BimoduleCompatibility) {
    for (const auto& t : all_triples()) {
        auto a_keys = t.ug->basis(2);
        auto b_keys = t.dual->basis(-1);
        for (const auto& m : t.x->basis(1)) {
            for (const auto& a : a_keys)
                EXPECT_EQ(t.x->d(t.x->left(a, m)), t.x->left(Vec(a), t.x->d(Vec(m))));
            for (const auto& b : b_keys) {
                Vec lhs = t.x->d(t.x->right(m, b));
                Vec rhs = t.x->right(t.x->d(Vec(m)), Vec(b));
                rhs.add(t.x->right(Vec(m), t.dual->d(Vec(b))), Q(sign_of(t.x->deg(m))));
                EXPECT_EQ(lhs, rhs) << t.g.name() << " " << key_string(m) << " " << key_string(b);
            }
        }
    }
}

TEST(Keller, BrokenAlgebraIsRejected) {
    LieAlgebra g = LieAlgebra::sl2();
    g.set_bracket(0, 1, {{2, Q(1)}, {0, Q(1)}});
    EXPECT_THROW(build_triple(g), ContractError);
}

TEST(Keller, TopFormIdentities) {
    for (int d = 1; d <= 4; ++d) {
        auto rep = top_form_check(d);
        EXPECT_TRUE(rep.ok()) << rep.failures.front();
        EXPECT_EQ(rep.checked, (1 << d) + (1 << d) * (1 << d));
    }
    OddSym sym(LieAlgebra::abelian(1));
    DualOdd dual(LieAlgebra::abelian(1));
    EXPECT_EQ(sym.contract(Vec(sym.top()), Vec(dual.top())), Vec(Key{}).scaled(Q(-1)));
}

TEST(Keller, ActionMaps) {
    for (const auto& t : all_triples()) {
        auto window = t.x->basis(2);
        XOperator id = rho_a(t, t.ug->unit());
        for (const auto& m : window) EXPECT_EQ(id(m), Vec(m));
        for (const auto& v : t.ug->basis(2)) {
            XOperator f = rho_a(t, Vec(v));
            XOperator df = partial_x(t, f, 0);
            for (const auto& m : window) EXPECT_TRUE(df(m).is_zero());
            for (const auto& w : t.ug->basis(1)) {
                XOperator prod = rho_a(t, t.ug->mul(v, w));
                XOperator comp = compose_ops(f, rho_a(t, Vec(w)));
                for (const auto& m : window) EXPECT_EQ(prod(m), comp(m));
            }
        }
        auto b_keys = t.dual->basis(-1);
        for (const auto& b1 : b_keys) {
            XOperator f = rho_b(t, Vec(b1));
            int deg = t.dual->deg(b1);
            XOperator df = partial_x(t, f, deg);
            XOperator expected = rho_b(t, t.dual->d(Vec(b1)));
            for (const auto& m : window) EXPECT_EQ(df(m), expected(m)) << t.g.name();
            EXPECT_EQ(epsilon_star(t, f), Vec(b1));
            for (const auto& b2 : b_keys) {
                XOperator prod = rho_b(t, t.dual->mul(b1, b2));
                XOperator comp = compose_ops(f, rho_b(t, Vec(b2)));
                for (const auto& m : window) EXPECT_EQ(prod(m), comp(m));
            }
        }
    }
}

TEST(Keller, RightHomotopyIdentity) {
    for (const auto& t : all_triples()) {
        auto window = t.window(1, 1, 2);
        auto values = ValueWindow::of(*t.x, 2);
        for (int r : {-1, 0, 1}) {
            XCochain f = random_xcochain(*t.trio, values, {{0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}}, r, 40 + r);
            XCochain lhs = t.trio->d_right(h_right(t, f)) + h_right(t, t.trio->d_right(f));
            for (int p = 0; p <= 1; ++p)
                for (int q = 1; q <= 2; ++q)
                    for (const auto& a : words_of_length(window.a, p))
                        for (const auto& b : sample_words(window.b, q, 30, 7))
                            for (const auto& x : window.x)
                                ASSERT_EQ(lhs(a, x, b), f(a, x, b)) << t.g.name() << " r=" << r << " q=" << q;
        }
    }
}

TEST(Keller, RightHomotopyFixture) {
    auto t = build_triple(LieAlgebra::abelian(1));
    auto values = ValueWindow::of(*t.x, 2);
    XCochain f = random_xcochain(*t.trio, values, {{0, 1}}, 0, 9);
    XCochain hf = h_right(t, f);
    for (const auto& u : t.ug->basis(2)) {
        Key m = KellerX::make(u, {});
        EXPECT_EQ(hf({}, m, {}), f({}, KellerX::make(u, {0}), {Key{0}}));
    }
}

TEST(Keller, LeftHomotopyIdentity) {
    for (const auto& t : all_triples()) {
        auto window = t.window(1, 2, 0);
        auto values = ValueWindow::of(*t.x, 3);
        for (int r : {-1, 0, 1}) {
            XCochain f = random_xcochain(*t.trio, values, {{1, 0}, {2, 0}, {3, 0}}, r, 50 + r);
            XCochain lhs = t.trio->d_left(h_left(t, f)) + h_left(t, t.trio->d_left(f));
            for (int p = 1; p <= 2; ++p)
                for (const auto& a : sample_words(window.a, p, 30, 3))
                    for (const auto& x : window.x) ASSERT_EQ(lhs(a, x, {}), f(a, x, {})) << t.g.name() << " r=" << r;
        }
    }
}

TEST(Keller, LeftHomotopyFixture) {
    auto t = build_triple(LieAlgebra::aff1());
    auto values = ValueWindow::of(*t.x, 2);
    XCochain f = random_xcochain(*t.trio, values, {{1, 0}}, 0, 11);
    XCochain hf = h_left(t, f);
    for (const auto& m : t.x->basis(1)) {
        auto [u, x] = KellerX::split(m);
        EXPECT_EQ(hf({}, m, {}), -f({u}, KellerX::make({}, x), {}));
    }
}

TEST(Keller, ZerothKernels) {
    for (const auto& g : {LieAlgebra::abelian(1), LieAlgebra::aff1()}) {
        auto t = build_triple(g);
        auto right = right_kernel_dims(t, 1);
        EXPECT_EQ(right.kernel, right.expected) << g.name();
        auto left = left_kernel_dims(t, 1, 1);
        EXPECT_EQ(left.kernel, left.expected) << g.name();
    }
}

TEST(Keller, ConeEpsilonHomotopy) {
    auto t = build_triple(LieAlgebra::aff1());
    ConeEpsilon cone(t, 4);
    EXPECT_EQ(cone.h(Key{0}), Vec(Key{1, 0}));
    for (int p = 0; p <= 4; ++p)
        for (const auto& v : cone.filtration_basis(p)) {
            Vec lhs = cone.d(cone.h(v));
            lhs.add(cone.h(cone.d(v)));
            ASSERT_EQ(lhs, Vec(v)) << key_string(v);
            for (const auto& [k, c] : cone.h(v)) {
                EXPECT_LE(ConeEpsilon::level(k), p);
                EXPECT_EQ(cone.deg(k), cone.deg(v) - 1);
                if (v != Key{0}) EXPECT_LE(ConeEpsilon::pbw_length(k), ConeEpsilon::pbw_length(v) - 1);
            }
        }
    EXPECT_THROW(cone.filtration_basis(5), ContractError);
}

TEST(Keller, ConeRhoHomotopy) {
    for (int degree = -1; degree <= 1; ++degree) {
        auto f = random_cone_cochain(0, degree, 3 + degree);
        ConeElement m = f({});
        ConeElement lhs = [m](int col) {
            Vec v = cone_rho::d(cone_rho::h(m))(col);
            v.add(cone_rho::h(cone_rho::d(m))(col));
            return v;
        };
        EXPECT_TRUE(cone_rho::equal(lhs, m, 6));
        EXPECT_TRUE(cone_rho::equal(cone_rho::d(cone_rho::d(m)), [](int) { return Vec(); }, 6));
    }
}

TEST(Keller, FrakHVanishesAndContracts) {
    for (int p = 0; p <= 2; ++p)
        for (int r = -1; r <= 1; ++r) {
            auto f = random_cone_cochain(p, r, 100 + 7 * p + r);
            auto seq = frak_h_sequence(f, 4, p, 4);
            ASSERT_TRUE(seq.vanishing_index.has_value());
            EXPECT_LE(*seq.vanishing_index, r + 1);
            EXPECT_LE(*seq.vanishing_index, p + r + 1 + 1);
            auto total = [](const ConeCochain& g) {
                ConeCochain dh = cone_dh(g), dp = cone_partial(g);
                return ConeCochain([dh, dp](const std::vector<int>& w) {
                    ConeElement a = dh(w), b = dp(w);
                    return ConeElement([a, b](int col) { return a(col) + b(col); });
                });
            };
            // Values of D f have degree at most r + 1, so 𝔥_k vanishes on them for k > r + 1.
            auto frak = [r](const ConeCochain& g) {
                auto s = frak_h_sequence(g, r + 1, -1, 0);
                return ConeCochain([s](const std::vector<int>& w) {
                    std::vector<ConeElement> parts;
                    for (const auto& t : s.terms) parts.push_back(t(w));
                    return ConeElement([parts](int col) {
                        Vec v;
                        for (std::size_t k = 0; k < parts.size(); ++k) v.add(parts[k](col), Q(sign_of(static_cast<int>(k))));
                        return v;
                    });
                });
            };
            ConeCochain first = frak(total(f)), second = total(frak(f));
            ConeCochain lhs = [first, second](const std::vector<int>& w) {
                ConeElement a = first(w), b = second(w);
                return ConeElement([a, b](int col) { return a(col) + b(col); });
            };
            for (int arity = p; arity <= p + 2; ++arity)
                EXPECT_TRUE(cone_cochains_equal(lhs, arity == p ? f : ConeCochain([](const std::vector<int>&) {
                    return ConeElement([](int) { return Vec(); });
                }), arity, 2, 4)) << "p=" << p << " r=" << r << " arity=" << arity;
        }
}
