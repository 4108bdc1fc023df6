#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "qkoszul/cocycles.hpp"

using namespace qkoszul;
using fixtures::gen_elem;
using fixtures::mono_elem;

TEST_CASE("section_lift") {
    Presentation p = fixtures::sq(2, 1, {2});
    CHECK(section_lift(Monomial{{1, 1}}, p) == Monomial{{1, 1}});
    CHECK_THROWS_AS(section_lift(Monomial{{2, 0}}, p), NotReducedError);

    Presentation q = fixtures::sq(3, 2, {2, 2});
    CHECK(section_lift(Monomial{{0, 0, 5}}, q) == Monomial{{0, 0, 5}});
}

TEST_CASE("zeta_tilde over k[x]") {
    Presentation p = fixtures::kxn(3);
    AlgebraElement x = gen_elem(1, 1);
    AlgebraElement x2 = mono_elem(Monomial{{2}});

    CHECK(zeta_tilde(1, x, x2, p).is_one());
    CHECK(zeta_tilde(1, x, x, p).is_zero());
    CHECK(zeta_tilde(1, x + x2, x2, p) ==
          zeta_tilde(1, x, x2, p) + zeta_tilde(1, x2, x2, p));
    CHECK(zeta_tilde(1, x + x2, x2, p).is_one());

    CHECK_THROWS_AS(zeta_tilde(1, AlgebraElement::one(1), x, p), NotAugmentedError);
}

TEST_CASE("zeta on A-basis monomials") {
    SECTION("k[x]/(x^4): nonzero exactly when exponents sum to N") {
        Presentation p = fixtures::kxn(4);
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                LaurentScalar v = zeta(1, Monomial{{a}}, Monomial{{b}}, p);
                if (a + b == 4)
                    CHECK(v.is_one());
                else
                    CHECK(v.is_zero());
            }
    }
    SECTION("zeta_i(x_i (x) x_i^{N_i-1}) = 1 in an S-type presentation") {
        Presentation p = fixtures::sq(3, 2, {2, 3});
        CHECK(zeta(1, Monomial{{1, 0, 0}}, Monomial{{1, 0, 0}}, p).is_one());
        CHECK(zeta(2, Monomial{{0, 1, 0}}, Monomial{{0, 2, 0}}, p).is_one());
    }
    SECTION("cross terms vanish") {
        Presentation p = fixtures::sq(3, 1, {2});
        CHECK(zeta(1, Monomial{{0, 1, 0}}, Monomial{{0, 0, 1}}, p).is_zero());
    }
    CHECK_THROWS_AS(zeta(1, Monomial{{0}}, Monomial{{1}}, fixtures::kxn(2)),
                    NotAugmentedError);
}

TEST_CASE("h_cochain") {
    Presentation p = fixtures::sq(3, 1, {3});
    CHECK(h_cochain(1, mono_elem(Monomial{{3, 0, 0}}), p).is_one());
    CHECK(h_cochain(1, mono_elem(Monomial{{2, 0, 0}}) +
                           mono_elem(Monomial{{3, 0, 0}}).scaled(LaurentScalar(2)),
                    p) == LaurentScalar(2));
    CHECK(h_cochain(1, mono_elem(Monomial{{0, 1, 1}}), p).is_zero());
    CHECK_THROWS_AS(h_cochain(1, AlgebraElement::one(3), p), NotAugmentedError);
}

TEST_CASE("bar_differential") {
    Presentation p = fixtures::sq(2, 0, {});
    AlgebraElement one = AlgebraElement::one(2);
    AlgebraElement x1 = gen_elem(2, 1);
    AlgebraElement x2 = gen_elem(2, 2);

    SECTION("degree 1: single product term") {
        BarElement t = bar_tensor({one, x1}, p);
        CHECK(algebra_from_bar0(bar_differential(t, p, AlgebraMode::S)) == x1);
    }

    SECTION("degree 2: two-term alternation") {
        BarElement t = bar_tensor({one, x1, x2}, p);
        BarElement d = bar_differential(t, p, AlgebraMode::S);
        BarElement expected(2, 1);
        expected.add({Monomial{{1, 0}}, Monomial{{0, 1}}}, LaurentScalar(1));
        expected.add({Monomial{{0, 0}}, Monomial{{1, 1}}}, LaurentScalar(-1));
        CHECK(d == expected);
    }

    SECTION("dd = 0 on sampled degree-3 tensors") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> pick(1, 3);
        Presentation h = fixtures::heisenberg();
        for (int it = 0; it < 40; ++it) {
            std::vector<AlgebraElement> slots{AlgebraElement::one(3)};
            for (int k = 0; k < 3; ++k)
                slots.push_back(fixtures::gen_elem(3, pick(rng)));
            BarElement t = bar_tensor(slots, h);
            for (AlgebraMode mode : {AlgebraMode::A, AlgebraMode::S, AlgebraMode::B}) {
                BarElement dd =
                    bar_differential(bar_differential(t, h, mode), h, mode);
                CHECK(dd.is_zero());
            }
        }
    }

    SECTION("interior identity slots are rejected") {
        CHECK_THROWS_AS(bar_tensor({one, one}, p), NotAugmentedError);
        BarElement t(2, 4);
        CHECK_THROWS_AS(bar_differential(t, p, AlgebraMode::S),
                        UnsupportedDegreeError);
    }
}

TEST_CASE("verify_zeta_properties") {
    CHECK(verify_zeta_properties(1, fixtures::kxn(3), 6).passed());
    CHECK(verify_zeta_properties(1, fixtures::sq(2, 1, {2}), 5).passed());
    CHECK(verify_zeta_properties(1, fixtures::heisenberg(), 5).passed());
    CHECK(verify_zeta_properties(2, fixtures::sq(3, 2, {2, 3}), 5).passed());
    CHECK_THROWS_AS(verify_zeta_properties(2, fixtures::kxn(3), 4), IndexError);
}

TEST_CASE("verify_coboundary_on_B") {
    CHECK(verify_coboundary_on_B(1, fixtures::kxn(3), 6).passed());
    CHECK(verify_coboundary_on_B(1, fixtures::sq(2, 1, {2}), 5).passed());
    CHECK(verify_coboundary_on_B(1, fixtures::heisenberg(), 5).passed());

    SECTION("the x^{N-1} coefficient functional is not the coboundary of h") {
        Report r = verify_coboundary_on_B(1, fixtures::kxn(3), 6,
                                          Defect::zeta_coefficient_index);
        CHECK_FALSE(r.passed());
        CHECK_FALSE(r.first_failure().empty());
    }
}

TEST_CASE("zeta is a 2-cocycle on the reduced bar complex of A") {
    Presentation h = fixtures::heisenberg();
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pick(1, 3);
    for (int it = 0; it < 60; ++it) {
        std::vector<AlgebraElement> slots{AlgebraElement::one(3)};
        for (int k = 0; k < 3; ++k) slots.push_back(fixtures::gen_elem(3, pick(rng)));
        BarElement boundary =
            bar_differential(bar_tensor(slots, h), h, AlgebraMode::A);
        LaurentScalar value(0);
        for (const auto& [s, c] : boundary.terms) {
            LaurentScalar eps =
                AlgebraElement::monomial_term(s[0], LaurentScalar(1)).augmentation();
            if (eps.is_zero()) continue;
            value += c * eps * zeta(1, s[1], s[2], h);
        }
        CHECK(value.is_zero());
    }
}

TEST_CASE("F maps") {
    SECTION("degree 1") {
        Presentation p = fixtures::sq(2, 1, {2});
        BarElement f1 = F_map(PhiGenerator{{1, 0}}, p);
        BarElement expected(2, 1);
        expected.add({Monomial{{0, 0}}, Monomial{{1, 0}}}, LaurentScalar(1));
        CHECK(f1 == expected);
    }
    SECTION("degree 2, nilpotent square, N=2") {
        Presentation p = fixtures::kxn(2);
        BarElement f2 = F_map(PhiGenerator{{2}}, p);
        BarElement expected(1, 2);
        expected.add({Monomial{{0}}, Monomial{{1}}, Monomial{{1}}}, LaurentScalar(1));
        CHECK(f2 == expected);
    }
    SECTION("degree 2, mixed generator") {
        Presentation p = fixtures::sq(2, 0, {});
        BarElement f2 = F_map(PhiGenerator{{1, 1}}, p);
        BarElement expected(2, 2);
        expected.add({Monomial{{0, 0}}, Monomial{{0, 1}}, Monomial{{1, 0}}},
                     LaurentScalar(1));
        expected.add({Monomial{{0, 0}}, Monomial{{1, 0}}, Monomial{{0, 1}}},
                     -canonical_q(2, 1));
        CHECK(f2 == expected);
    }
    CHECK_THROWS_AS(F_map(PhiGenerator{{3}}, fixtures::kxn(4)),
                    UnsupportedDegreeError);
}

TEST_CASE("verify_F_squares") {
    CHECK(verify_F_squares(fixtures::kxn(3)).passed());
    CHECK(verify_F_squares(fixtures::sq(2, 0, {})).passed());
    CHECK(verify_F_squares(fixtures::sq(3, 2, {2, 3})).passed());
    CHECK(verify_F_squares(associated_graded(fixtures::heisenberg())).passed());
}

TEST_CASE("verify_identifications") {
    CHECK(verify_identifications(fixtures::kxn(3)).passed());
    CHECK(verify_identifications(fixtures::sq(3, 2, {2, 3})).passed());
    CHECK(verify_identifications(fixtures::heisenberg()).passed());
    CHECK(verify_identifications(fixtures::sq(2, 0, {})).passed());

    SECTION("wrong coefficient functional breaks the pullback") {
        Report r = verify_identifications(fixtures::sq(3, 2, {2, 3}),
                                          Defect::zeta_coefficient_index);
        CHECK_FALSE(r.passed());
    }
}

TEST_CASE("filtration_degree") {
    CHECK(filtration_degree(1, fixtures::sq(2, 1, {2})) == 2);

    Presentation p = Presentation::make(2, 1, {2}, MonomialOrder::wgrlex, {3, 1});
    CHECK(filtration_degree(1, p) == 6);

    CHECK_THROWS_AS(filtration_degree(1, fixtures::sq(2, 0, {})), IndexError);
}
