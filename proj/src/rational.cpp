#include "qcheb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qcheb {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::fromString(const std::string& text) {
    // Accept ^-?[0-9]+(/[0-9]+)?$ only; everything else (spaces, decimals,
    // signs inside the denominator) is rejected up front.
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t digitsStart = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digitsStart) throw std::invalid_argument("Rational: expected 'p' or 'p/q', got '" + text + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw std::invalid_argument("Rational: expected 'p' or 'p/q', got '" + text + "'");
        ++i;
        std::size_t denStart = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == denStart || i != text.size())
            throw std::invalid_argument("Rational: expected 'p' or 'p/q', got '" + text + "'");
    }
    mpq_class v(text, 10);
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    if (isInteger()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(unsigned exponent) const {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), v_.get_num_mpz_t(), exponent);
    mpz_pow_ui(out.get_den_mpz_t(), v_.get_den_mpz_t(), exponent);
    // num and den are coprime, so their powers are too; no canonicalize needed
    // except for the sign convention, which powers preserve (den > 0).
    return Rational(std::move(out));
}

Rational Rational::abs() const {
    mpq_class out;
    mpq_abs(out.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(out));
}

Rational Rational::reciprocal() const {
    if (isZero()) throw std::invalid_argument("Rational: reciprocal of zero");
    mpq_class out;
    mpq_inv(out.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(out));
}

Rational Rational::operator-() const {
    mpq_class out;
    mpq_neg(out.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(out));
}

Rational& Rational::operator/=(const Rational& r) {
    if (r.isZero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= r.v_;
    return *this;
}

}  // namespace qcheb
