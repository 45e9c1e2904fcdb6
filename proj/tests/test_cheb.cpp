#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcheb/cheb.hpp"
#include "qcheb/serialize.hpp"

#include <stdexcept>

using namespace qcheb;

namespace {

MultiPoly xsq(int a, int b, int c, long coeff = 1) {
    return MultiPoly::term({a, b, c}, Rational(coeff));
}

}  // namespace

TEST_CASE("low order polynomials") {
    CHECK(uPoly(0) == MultiPoly(Rational(1)));
    CHECK(uPoly(1) == xsq(1, 0, 0) + xsq(1, 0, 1));
    CHECK(uPoly(2) == xsq(2, 0, 3) + xsq(2, 0, 2) + xsq(2, 0, 1) + xsq(2, 0, 0) + xsq(0, 1, 1));
    CHECK(uPoly(3) == xsq(3, 0, 6) + xsq(3, 0, 5) + xsq(3, 0, 4) + xsq(3, 0, 3, 2) +
                          xsq(3, 0, 2) + xsq(3, 0, 1) + xsq(3, 0, 0) + xsq(1, 1, 4) +
                          xsq(1, 1, 3) + xsq(1, 1, 2) + xsq(1, 1, 1));
    CHECK(tPoly(0) == MultiPoly(Rational(1)));
    CHECK(tPoly(1) == xsq(1, 0, 0));
    CHECK(tPoly(2) == xsq(2, 0, 1) + xsq(2, 0, 0) + xsq(0, 1, 1));
    CHECK(tPoly(3) == xsq(3, 0, 3) + xsq(3, 0, 2) + xsq(3, 0, 1) + xsq(3, 0, 0) + xsq(1, 1, 3) +
                          xsq(1, 1, 2) + xsq(1, 1, 1));
}

TEST_CASE("recurrence steps restated") {
    const MultiPoly x = MultiPoly::variable(Var::X);
    const MultiPoly s = MultiPoly::variable(Var::S);
    for (int n = 2; n <= 10; ++n) {
        const MultiPoly stepU = (MultiPoly(Rational(1)) + xsq(0, 0, n)) * x;
        CHECK(uPoly(n) == stepU * uPoly(n - 1) + (s.timesQPower(n - 1)) * uPoly(n - 2));
        const MultiPoly stepT = (MultiPoly(Rational(1)) + xsq(0, 0, n - 1)) * x;
        CHECK(tPoly(n) == stepT * tPoly(n - 1) + (s.timesQPower(n - 1)) * tPoly(n - 2));
    }
}

TEST_CASE("cache rejects the wrong family") {
    ChebCache second(ChebKind::SecondKind);
    ChebCache first(ChebKind::FirstKind);
    CHECK(uRecurrence(3, second) == uPoly(3));
    CHECK(tRecurrence(3, first) == tPoly(3));
    CHECK_THROWS_AS(uRecurrence(2, first), std::invalid_argument);
    CHECK_THROWS_AS(tRecurrence(2, second), std::invalid_argument);
    CHECK_THROWS_AS(second.at(-1), std::invalid_argument);
}

TEST_CASE("explicit sum route matches the recurrence route") {
    for (int n = 0; n <= 15; ++n) {
        CHECK(uExplicit(n) == uPoly(n));
        if (n >= 1) CHECK(tExplicit(n) == tPoly(n));
        const auto u = dualRouteCheck(ChebKind::SecondKind, n);
        CHECK(u.pass);
        const auto t = dualRouteCheck(ChebKind::FirstKind, n);
        CHECK(t.pass);
    }
    CHECK_THROWS_AS(tExplicit(0), std::invalid_argument);
}

TEST_CASE("summands") {
    CHECK(uTerm(2, 0) == xsq(2, 0, 0) + xsq(2, 0, 1) + xsq(2, 0, 2) + xsq(2, 0, 3));
    CHECK(uTerm(2, 1) == xsq(0, 1, 1));
    // even-n edge of the first kind collapses to q^{j^2} s^j
    CHECK(tTerm(2, 1) == xsq(0, 1, 1));
    CHECK(tTerm(4, 2) == xsq(0, 2, 4));
    CHECK(tTerm(6, 3) == xsq(0, 3, 9));
    // incomplete sums accrete by exactly one summand
    for (int n = 1; n <= 12; ++n) {
        MultiPoly acc;
        for (int j = 0; 2 * j <= n; ++j) acc = acc + uTerm(n, j);
        CHECK(acc == uPoly(n));
    }
    CHECK_THROWS_AS(uTerm(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(tTerm(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(tTerm(4, 3), std::invalid_argument);
}

TEST_CASE("x parity and degrees") {
    for (int n = 0; n <= 12; ++n) {
        CHECK(uPoly(n).degree(Var::X) == n);
        CHECK(tPoly(n).degree(Var::X) == n);
        for (const auto& [m, c] : uPoly(n).terms()) {
            CHECK((n - m.xExp) % 2 == 0);
            CHECK(m.xExp + 2 * m.sExp == n);  // s tracks the truncation depth
        }
        for (const auto& [m, c] : tPoly(n).terms()) {
            CHECK(m.xExp + 2 * m.sExp == n);
        }
    }
}

TEST_CASE("classical values at q = 1") {
    for (int n = 0; n <= 12; ++n) {
        // second kind at x = 1, s = -1 counts n + 1; first kind pins 1
        CHECK(uPoly(n).evaluate(Rational(1), Rational(-1), Rational(1)) == Rational(n + 1));
        CHECK(tPoly(n).evaluate(Rational(1), Rational(-1), Rational(1)) == Rational(1));
    }
}

TEST_CASE("x-cleared derivative identity") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(derivativeIdentityCheck(ChebKind::SecondKind, n).pass);
        CHECK(derivativeIdentityCheck(ChebKind::FirstKind, n).pass);
    }
    CHECK_THROWS_AS(derivativeIdentityCheck(ChebKind::SecondKind, 0), std::invalid_argument);
    // spelled out once at n = 3, second kind
    const MultiPoly lhs = MultiPoly::variable(Var::X) * uPoly(3).derivative(Var::X);
    const MultiPoly rhs = Rational(3) * uPoly(3) - Rational(2) * uTerm(3, 1);
    CHECK(lhs == rhs);
}
