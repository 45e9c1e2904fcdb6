#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcheb/qcalc.hpp"
#include "qcheb/serialize.hpp"

#include <stdexcept>
#include <vector>

using namespace qcheb;

namespace {

// Plain integer binomials, the q = 1 shadow of everything here.
long long intBinom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

MultiPoly qPow(int e) { return MultiPoly::term({0, 0, e}, Rational(1)); }

}  // namespace

TEST_CASE("q-integers and q-factorials") {
    CHECK(qInteger(0).isZero());
    CHECK(qInteger(1) == MultiPoly(Rational(1)));
    CHECK(qInteger(4) == MultiPoly(Rational(1)) + qPow(1) + qPow(2) + qPow(3));
    CHECK(qFactorial(0) == MultiPoly(Rational(1)));
    CHECK(qFactorial(3) == qInteger(1) * qInteger(2) * qInteger(3));
    CHECK_THROWS_AS(qInteger(-1), std::invalid_argument);
    CHECK_THROWS_AS(qFactorial(-2), std::invalid_argument);
    // [n] at q = 1 is n
    for (int n = 0; n <= 8; ++n) {
        CHECK(qInteger(n).evaluate(Rational(0), Rational(0), Rational(1)) == Rational(n));
    }
}

TEST_CASE("shifted factorials and the (1 + q^i) products") {
    const MultiPoly x = MultiPoly::variable(Var::X);
    CHECK(qShiftedFactorial(x, 0) == MultiPoly(Rational(1)));
    const MultiPoly expected =
        (MultiPoly(Rational(1)) - x) * (MultiPoly(Rational(1)) - qPow(1) * x);
    CHECK(qShiftedFactorial(x, 2) == expected);
    CHECK(onePlusQPowerProduct(2, 1) == MultiPoly(Rational(1)));
    CHECK(onePlusQPowerProduct(2, 4) == (MultiPoly(Rational(1)) + qPow(2)) *
                                            (MultiPoly(Rational(1)) + qPow(3)) *
                                            (MultiPoly(Rational(1)) + qPow(4)));
    // the shifted factorial at base -q reproduces the same product
    const MultiPoly minusQ = MultiPoly::term({0, 0, 1}, Rational(-1));
    CHECK(qShiftedFactorial(minusQ, 3) == onePlusQPowerProduct(1, 3));
}

TEST_CASE("negQPochRatio is the middle slice of the (1 + q^i) ladder") {
    for (int n = 0; n <= 10; ++n) {
        for (int j = 0; 2 * j <= n; ++j) {
            CHECK(negQPochRatio(n, j) == onePlusQPowerProduct(j + 1, n - j));
        }
    }
    CHECK_THROWS_AS(negQPochRatio(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(negQPochRatio(5, -1), std::invalid_argument);
}

TEST_CASE("gaussian binomial table basics") {
    QBinomialTable table;
    CHECK(table.binom(0, 0) == MultiPoly(Rational(1)));
    CHECK(table.binom(5, 0) == MultiPoly(Rational(1)));
    CHECK(table.binom(5, 5) == MultiPoly(Rational(1)));
    CHECK(table.binom(3, -1).isZero());
    CHECK(table.binom(3, 4).isZero());
    CHECK(table.binom(-2, 0).isZero());
    const MultiPoly expected =
        qPow(4) + qPow(3) + Rational(2) * qPow(2) + qPow(1) + MultiPoly(Rational(1));
    CHECK(table.binom(4, 2) == expected);
    CHECK(qBinomial(4, 2) == expected);
}

TEST_CASE("two pascal constructions agree") {
    QBinomialTable table;
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(table.binom(n, k) == qBinomialByHighPascal(n, k));
        }
    }
}

TEST_CASE("symmetry and q = 1 specialization") {
    QBinomialTable table;
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(table.binom(n, k) == table.binom(n, n - k));
            CHECK(table.binom(n, k).evaluate(Rational(0), Rational(0), Rational(1)) ==
                  Rational(intBinom(n, k)));
        }
    }
}

TEST_CASE("gaussian binomials have nonnegative integer coefficients") {
    QBinomialTable table;
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const auto& [m, c] : table.binom(n, k).terms()) {
                CHECK(m.xExp == 0);
                CHECK(m.sExp == 0);
                CHECK(c.isInteger());
                CHECK(c.sign() > 0);
            }
            // degree of the Gaussian binomial is k (n - k)
            if (k <= n) CHECK(table.binom(n, k).degree(Var::Q) == k * (n - k));
        }
    }
}

TEST_CASE("recurrence and ratio identity sweep") {
    QBinomialTable table;
    const auto at53 = checkQbinomIdentitiesAt(5, 3, table);
    CHECK(at53.size() == 2);  // ratio rules need k <= n - k
    const auto at52 = checkQbinomIdentitiesAt(5, 2, table);
    CHECK(at52.size() == 4);
    for (const auto& r : at52) CHECK(r.pass);

    const auto reports = verifyQbinomIdentities(12);
    int pascal = 0, ratio = 0;
    for (const auto& r : reports) {
        CHECK(r.pass);
        CHECK(r.residual.isZero());
        if (r.id == IdentityId::QbinomPascalQk || r.id == IdentityId::QbinomPascalQnk) ++pascal;
        if (r.id == IdentityId::QbinomRatioBase || r.id == IdentityId::QbinomRatioScaled) ++ratio;
    }
    CHECK(pascal == 2 * 78);  // one pair per 1 <= k <= n <= 12
    CHECK(ratio == 2 * 36);   // pairs with k <= n - k
    CHECK_THROWS_AS(verifyQbinomIdentities(0), std::invalid_argument);
}
