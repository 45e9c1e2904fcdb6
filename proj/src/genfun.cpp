#include "qcheb/genfun.hpp"

#include <stdexcept>

namespace qcheb {
namespace {

MultiPoly xTimesQPower(int p) { return MultiPoly::term({1, 0, p}, Rational(1)); }

}  // namespace

PowerSeries etaZ(const PowerSeries& series) {
    PowerSeries out(series.order());
    for (int n = 0; n < series.order(); ++n) {
        out.setCoeff(n, series.coeff(n).timesQPower(n));
    }
    return out;
}

PowerSeries applyOperator(const std::vector<OperatorTerm>& terms, const PowerSeries& series) {
    PowerSeries out = series;
    for (const auto& term : terms) {
        for (int n = term.zPower; n < series.order(); ++n) {
            // a z^d eta^e contributes a q^{e (n - d)} g_{n-d} to coefficient n.
            const MultiPoly& src = series.coeff(n - term.zPower);
            out.setCoeff(n, out.coeff(n) -
                                 term.a * src.timesQPower(term.etaPower * (n - term.zPower)));
        }
    }
    return out;
}

PowerSeries solveOperatorEquation(const std::vector<OperatorTerm>& terms, const PowerSeries& rhs,
                                  int order) {
    if (order < 1) throw std::invalid_argument("solveOperatorEquation: order must be >= 1");
    for (const auto& term : terms) {
        if (term.zPower < 1)
            throw std::invalid_argument("solveOperatorEquation: operator terms must raise the z degree");
    }
    PowerSeries g(order);
    for (int n = 0; n < order; ++n) {
        MultiPoly coeff = n < rhs.order() ? rhs.coeff(n) : MultiPoly();
        for (const auto& term : terms) {
            if (n < term.zPower) continue;
            coeff = coeff +
                    term.a * g.coeff(n - term.zPower).timesQPower(term.etaPower * (n - term.zPower));
        }
        g.setCoeff(n, std::move(coeff));
    }
    return g;
}

std::vector<OperatorTerm> secondKindOperator() {
    return {
        {MultiPoly::variable(Var::X), 1, 0},
        {xTimesQPower(1), 1, 1},
        {MultiPoly::term({0, 1, 1}, Rational(1)), 2, 1},
    };
}

PowerSeries solveSecondKindGf(int order) {
    PowerSeries rhs(order);
    rhs.setCoeff(0, MultiPoly(Rational(1)));
    return solveOperatorEquation(secondKindOperator(), rhs, order);
}

std::vector<OperatorTerm> firstKindOperator(bool altSquareSign) {
    const Rational sq = altSquareSign ? Rational(-1) : Rational(1);
    return {
        {MultiPoly::variable(Var::X), 1, 0},
        {MultiPoly::variable(Var::X), 1, 1},
        {MultiPoly::term({0, 1, 1}, sq), 2, 1},
    };
}

PowerSeries firstKindRhs(int order) {
    PowerSeries rhs(order);
    rhs.setCoeff(0, MultiPoly(Rational(1)));
    if (order > 1) rhs.setCoeff(1, MultiPoly::term({1, 0, 0}, Rational(-1)));
    return rhs;
}

PowerSeries solveFirstKindGf(int order, bool altSquareSign) {
    return solveOperatorEquation(firstKindOperator(altSquareSign), firstKindRhs(order), order);
}

std::vector<MultiPoly> schurSequence(int order) {
    if (order < 2) throw std::invalid_argument("schurSequence: order must be >= 2");
    std::vector<MultiPoly> s(static_cast<std::size_t>(order));
    s[0] = MultiPoly();
    s[1] = MultiPoly(Rational(1));
    for (int n = 2; n < order; ++n) {
        s[static_cast<std::size_t>(n)] =
            s[static_cast<std::size_t>(n - 1)] -
            s[static_cast<std::size_t>(n - 2)].timesQPower(n - 2);
    }
    return s;
}

std::vector<OperatorTerm> schurOperator(bool altSquareSign) {
    const Rational sq = altSquareSign ? Rational(1) : Rational(-1);
    return {
        {MultiPoly(Rational(1)), 1, 0},
        {MultiPoly(sq), 2, 1},
    };
}

PowerSeries solveSchurGf(int order, bool altSquareSign) {
    PowerSeries rhs(order);
    if (order > 1) rhs.setCoeff(1, MultiPoly(Rational(1)));
    return solveOperatorEquation(schurOperator(altSquareSign), rhs, order);
}

}  // namespace qcheb
