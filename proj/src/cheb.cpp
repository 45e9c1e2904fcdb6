#include "qcheb/cheb.hpp"

#include "qcheb/qcalc.hpp"

#include <stdexcept>

namespace qcheb {
namespace {

const MultiPoly& varX() {
    static const MultiPoly x = MultiPoly::variable(Var::X);
    return x;
}

}  // namespace

const MultiPoly& ChebCache::at(int n) {
    if (n < 0) throw std::invalid_argument("ChebCache: negative index");
    if (polys_.empty()) {
        polys_.push_back(MultiPoly(Rational(1)));
        polys_.push_back(kind_ == ChebKind::SecondKind
                             ? MultiPoly::term({1, 0, 0}, Rational(1)) +
                                   MultiPoly::term({1, 0, 1}, Rational(1))
                             : varX());
    }
    while (static_cast<int>(polys_.size()) <= n) {
        int m = static_cast<int>(polys_.size());
        // (1 + q^m) x for the second kind, (1 + q^{m-1}) x for the first.
        int stepPower = kind_ == ChebKind::SecondKind ? m : m - 1;
        const MultiPoly& p1 = polys_[static_cast<std::size_t>(m - 1)];
        const MultiPoly& p2 = polys_[static_cast<std::size_t>(m - 2)];
        MultiPoly next = p1.timesTerm({1, 0, 0}, Rational(1)) +
                         p1.timesTerm({1, 0, stepPower}, Rational(1)) +
                         p2.timesTerm({0, 1, m - 1}, Rational(1));
        polys_.push_back(std::move(next));
    }
    return polys_[static_cast<std::size_t>(n)];
}

MultiPoly uRecurrence(int n, ChebCache& cache) {
    if (cache.kind() != ChebKind::SecondKind)
        throw std::invalid_argument("uRecurrence: cache holds the wrong family");
    return cache.at(n);
}

MultiPoly tRecurrence(int n, ChebCache& cache) {
    if (cache.kind() != ChebKind::FirstKind)
        throw std::invalid_argument("tRecurrence: cache holds the wrong family");
    return cache.at(n);
}

const MultiPoly& uPoly(int n) {
    thread_local ChebCache cache(ChebKind::SecondKind);
    return cache.at(n);
}

const MultiPoly& tPoly(int n) {
    thread_local ChebCache cache(ChebKind::FirstKind);
    return cache.at(n);
}

MultiPoly uTerm(int n, int j) {
    if (n < 0 || j < 0 || 2 * j > n) throw std::invalid_argument("uTerm: requires 0 <= j <= n/2");
    MultiPoly term = qBinomial(n - j, j) * negQPochRatio(n, j);
    return term.timesTerm({n - 2 * j, j, j * j}, Rational(1));
}

MultiPoly tTerm(int n, int j) {
    if (n < 1 || j < 0 || 2 * j > n) throw std::invalid_argument("tTerm: requires n >= 1, 0 <= j <= n/2");
    if (2 * j == n) {
        // The shifted-factorial quotient would have a lower numerator index
        // than denominator index here. The whole x-degree-0 part of
        // T_n = x U_{n-1} + q^{n-1} s U_{n-2} is the final summand of U_{n-2}
        // times q^{n-1} s, which is division-free.
        return uTerm(n - 2, j - 1).timesTerm({0, 1, n - 1}, Rational(1));
    }
    // The q-integer quotient times binom(n-j, j) collapses to
    // q^j binom(n-j, j) + binom(n-j-1, j-1), which is already polynomial.
    MultiPoly coeff = qBinomial(n - j, j).timesQPower(j) + qBinomial(n - j - 1, j - 1);
    MultiPoly term = coeff * onePlusQPowerProduct(j + 1, n - j - 1);
    return term.timesTerm({n - 2 * j, j, j * j}, Rational(1));
}

MultiPoly uExplicit(int n) {
    if (n < 0) throw std::invalid_argument("uExplicit: negative n");
    MultiPoly out;
    for (int j = 0; 2 * j <= n; ++j) out = out + uTerm(n, j);
    return out;
}

MultiPoly tExplicit(int n) {
    if (n < 1) throw std::invalid_argument("tExplicit: requires n >= 1");
    MultiPoly out;
    for (int j = 0; 2 * j <= n; ++j) out = out + tTerm(n, j);
    return out;
}

IdentityReport derivativeIdentityCheck(ChebKind kind, int n) {
    if (n < 1) throw std::invalid_argument("derivativeIdentityCheck: requires n >= 1");
    const bool second = kind == ChebKind::SecondKind;
    const MultiPoly p = second ? uExplicit(n) : tExplicit(n);
    MultiPoly weighted;  // sum_j j * term_j
    for (int j = 1; 2 * j <= n; ++j) {
        weighted = weighted + Rational(j) * (second ? uTerm(n, j) : tTerm(n, j));
    }
    // x-cleared form: x dP/dx = n P - 2 sum_j j term_j.
    MultiPoly residual =
        p.derivative(Var::X).timesTerm({1, 0, 0}, Rational(1)) - Rational(n) * p + Rational(2) * weighted;
    return makeReport(second ? IdentityId::UDerivative : IdentityId::TDerivative, n, 0,
                      std::move(residual));
}

IdentityReport dualRouteCheck(ChebKind kind, int n) {
    const bool second = kind == ChebKind::SecondKind;
    MultiPoly viaSum = second ? uExplicit(n) : (n == 0 ? MultiPoly(Rational(1)) : tExplicit(n));
    MultiPoly residual = (second ? uPoly(n) : tPoly(n)) - viaSum;
    return makeReport(second ? IdentityId::UDualRoute : IdentityId::TDualRoute, n, 0,
                      std::move(residual));
}

}  // namespace qcheb
