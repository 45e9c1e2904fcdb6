#include "qcheb/serialize.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcheb {

namespace {

void appendTerm(std::ostream& os, const Monomial& m, const Rational& coeff) {
    os << coeff.str();
    auto factor = [&os](const char* symbol, int exp) {
        if (exp == 0) return;
        os << '*' << symbol;
        if (exp != 1) os << '^' << exp;
    };
    factor("x", m.xExp);
    factor("s", m.sExp);
    factor("q", m.qExp);
}

}  // namespace

std::string polyToText(const MultiPoly& p) {
    if (p.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending monomial order, signs folded into the joins.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, coeff] = *it;
        if (first) {
            appendTerm(os, m, coeff);
            first = false;
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
            appendTerm(os, m, coeff.abs());
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << polyToText(p); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string rationalToDecimal(const Rational& r, int decimals) {
    if (decimals < 0) throw std::invalid_argument("rationalToDecimal: negative decimals");
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    const mpz_class den = r.raw().get_den();
    const mpz_class scaled = r.raw().get_num() * pow10;
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    if (2 * abs(rem) >= den) quot += sgn(scaled) < 0 ? -1 : 1;  // half away from zero
    const bool negative = sgn(quot) < 0;
    const mpz_class mag = abs(quot);
    std::string out = negative ? "-" : "";
    out += mpz_class(mag / pow10).get_str();
    if (decimals > 0) {
        std::string frac = mpz_class(mag % pow10).get_str();
        out += '.';
        out += std::string(static_cast<std::size_t>(decimals) - frac.size(), '0');
        out += frac;
    }
    return out;
}

nlohmann::ordered_json rationalToJson(const Rational& r) {
    return {{"num", r.numeratorString()}, {"den", r.denominatorString()}};
}

nlohmann::ordered_json polyToJson(const MultiPoly& p) {
    auto terms = nlohmann::ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, coeff] = *it;
        terms.push_back({{"coeff", rationalToJson(coeff)}, {"x", m.xExp}, {"s", m.sExp},
                         {"q", m.qExp}});
    }
    return terms;
}

nlohmann::ordered_json evalResultToJson(const std::string& kind, int n, std::optional<int> k,
                                        const MultiPoly& poly) {
    nlohmann::ordered_json out;
    out["kind"] = kind;
    out["n"] = n;
    if (k) out["k"] = *k;
    if (poly.isConstant()) {
        out["value"] = rationalToJson(poly.constantValue());
    } else {
        out["poly"] = polyToJson(poly);
    }
    return out;
}

}  // namespace qcheb
