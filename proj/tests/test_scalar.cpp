#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qkoszul/scalar.hpp"

using namespace qkoszul;

namespace {

// Random Laurent scalars over a small parameter pool, for property tests.
LaurentScalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 4);
    const ParamIndex pool[3] = {{1, 2}, {1, 3}, {2, 3}};

    LaurentScalar s;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        QExponents e;
        int nparams = pick(rng);
        for (int p = 0; p < nparams; ++p) e[pool[pick(rng)]] = expo(rng);
        s += LaurentScalar::monomial(e, rational(num(rng), den(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("canonical_q") {
    CHECK(canonical_q(1, 2) == LaurentScalar::parameter(1, 2));
    CHECK(canonical_q(2, 1) == LaurentScalar::parameter(1, 2).inverse());
    CHECK(canonical_q(3, 3) == LaurentScalar(1));
    CHECK_THROWS_AS(canonical_q(0, 2, 3), IndexError);
    CHECK_THROWS_AS(canonical_q(1, 4, 3), IndexError);

    SECTION("q_ij * q_ji = 1") {
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                CHECK((canonical_q(i, j) * canonical_q(j, i)).is_one());
    }
}

TEST_CASE("scalar addition") {
    LaurentScalar q = canonical_q(1, 2);
    CHECK((q + (-q)).is_zero());
    CHECK(q + q == LaurentScalar(2) * q);

    LaurentScalar sum = (q + LaurentScalar(1)) + q.inverse();
    CHECK(sum.term_count() == 3);
    CHECK(sum.str() == "1 + q1_2^-1 + q1_2");
}

TEST_CASE("scalar multiplication") {
    LaurentScalar q = canonical_q(1, 2);
    CHECK((q * q.inverse()).is_one());

    // The d-scalar (-1)^{a_2} q_21^{sigma_1(1) tau_2(1)} for n=2, a=(1,1), i=1.
    LaurentScalar d_scalar = LaurentScalar(-1) * canonical_q(2, 1).pow(1 * 1);
    CHECK(d_scalar == -canonical_q(2, 1));
    CHECK(d_scalar.str() == "-q1_2^-1");

    CHECK((LaurentScalar(0) * (q + LaurentScalar(7))).is_zero());
}

TEST_CASE("scalar inversion") {
    LaurentScalar q = canonical_q(1, 2);
    LaurentScalar a = LaurentScalar(-2) * q.pow(3);
    CHECK(a.inverse() == LaurentScalar(rational(-1, 2)) * q.pow(-3));
    CHECK(a.inverse().str() == "-1/2*q1_2^-3");

    CHECK_THROWS_AS((q + LaurentScalar(1)).inverse(), NotAUnitError);
    CHECK(LaurentScalar(1).inverse().is_one());
}

TEST_CASE("scalar evaluation") {
    LaurentScalar q = canonical_q(1, 2);
    std::map<ParamIndex, Rational> two{{{1, 2}, rational(2)}};
    std::map<ParamIndex, Rational> one{{{1, 2}, rational(1)}};

    CHECK(q.inverse().eval(two) == rational(1, 2));
    CHECK((q + q.inverse()).eval(one) == rational(2));
    CHECK_THROWS_AS(q.eval({}), MissingParameterError);
    CHECK_THROWS_AS(q.eval({{{1, 2}, rational(0)}}), ZeroParameterValueError);
}

TEST_CASE("ring axioms on random scalars") {
    std::mt19937_64 rng(20240811);
    for (int it = 0; it < 200; ++it) {
        LaurentScalar a = random_scalar(rng);
        LaurentScalar b = random_scalar(rng);
        LaurentScalar c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK((a * LaurentScalar(1)) == a);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(77);
    std::map<ParamIndex, Rational> assign{
        {{1, 2}, rational(2)}, {{1, 3}, rational(-1, 3)}, {{2, 3}, rational(5, 2)}};
    for (int it = 0; it < 100; ++it) {
        LaurentScalar a = random_scalar(rng);
        LaurentScalar b = random_scalar(rng);
        CHECK((a * b).eval(assign) == a.eval(assign) * b.eval(assign));
        CHECK((a + b).eval(assign) == a.eval(assign) + b.eval(assign));
    }
}

TEST_CASE("canonical form is construction-order independent") {
    LaurentScalar q12 = canonical_q(1, 2);
    LaurentScalar q13 = canonical_q(1, 3);
    LaurentScalar x = (q12 + q13) * (q12 - q13);
    LaurentScalar y = q12 * q12 - q13 * q13;
    CHECK(x == y);
    CHECK((x - y).is_zero());
}
