#pragma once

#include "qcheb/rational.hpp"

#include <compare>
#include <map>
#include <optional>

namespace qcheb {

enum class Var { X, S, Q };

// Exponent triple of one term. The library-wide total order on monomials is
// lexicographic on (xExp, sExp, qExp); std::map keeps terms sorted by it.
struct Monomial {
    int xExp = 0;
    int sExp = 0;
    int qExp = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Canonical sparse polynomial in x, s, q over Rational. No stored coefficient
// is ever zero, so structural equality is semantic equality. All operations
// are pure: they return new values and never mutate their inputs, which makes
// polynomials safe to share across threads.
class MultiPoly {
public:
    MultiPoly() = default;  // zero polynomial
    MultiPoly(const Rational& constant);
    MultiPoly(long constant) : MultiPoly(Rational(constant)) {}

    static MultiPoly term(const Monomial& m, const Rational& coeff);
    static MultiPoly variable(Var v);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    Rational constantValue() const;  // throws std::invalid_argument unless constant
    Rational coefficient(const Monomial& m) const;
    int degree(Var v) const;  // -1 for the zero polynomial
    std::size_t termCount() const { return terms_.size(); }

    MultiPoly derivative(Var v) const;

    struct Bindings {
        std::optional<Rational> x, s, q;
    };
    // Replaces bound variables by exact values; unbound variables stay symbolic.
    MultiPoly substitute(const Bindings& b) const;
    // Total substitution convenience: throws if the result is not constant.
    Rational evaluate(const Rational& x, const Rational& s, const Rational& q) const;

    // Multiplies by coeff * x^a s^b q^c without building a temporary polynomial.
    MultiPoly timesTerm(const Monomial& m, const Rational& coeff) const;
    MultiPoly timesQPower(int p) const { return timesTerm({0, 0, p}, Rational(1)); }
    // Exact substitution s -> q^2 s as a monomial remap: qExp += 2 * sExp.
    MultiPoly remapSToQSquaredS() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    void addTerm(const Monomial& m, const Rational& c);  // accumulates, purging zeros
    std::map<Monomial, Rational> terms_;
};

}  // namespace qcheb
