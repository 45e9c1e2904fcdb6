#pragma once

#include "qcheb/multipoly.hpp"
#include "qcheb/rational.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace qcheb {

// Canonical text form: terms in descending monomial order, joined with
// " + " / " - "; each term is coeff then the nonzero-exponent factors, e.g.
// "3/2*x^2*s*q^3". The coefficient is always printed; exponent 1 prints as the
// bare symbol; the zero polynomial prints as "0".
std::string polyToText(const MultiPoly& p);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const Rational& r);

// Fixed-point decimal with exactly `decimals` digits after the point,
// rounding half away from zero. decimals = 0 gives a plain integer.
std::string rationalToDecimal(const Rational& r, int decimals);

// {"num": "...", "den": "..."} with decimal-string values.
nlohmann::ordered_json rationalToJson(const Rational& r);

// Term list in the same descending order as the text form:
// [{"coeff": {"num", "den"}, "x": int, "s": int, "q": int}, ...].
nlohmann::ordered_json polyToJson(const MultiPoly& p);

// Whole eval result: {kind, n, k?, poly?} or {kind, n, k?, value?}.
nlohmann::ordered_json evalResultToJson(const std::string& kind, int n, std::optional<int> k,
                                        const MultiPoly& poly);

}  // namespace qcheb
