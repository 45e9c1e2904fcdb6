#include "qcheb/multipoly.hpp"

#include <stdexcept>

namespace qcheb {
namespace {

int exponentOf(const Monomial& m, Var v) {
    switch (v) {
        case Var::X: return m.xExp;
        case Var::S: return m.sExp;
        case Var::Q: return m.qExp;
    }
    return 0;
}

int& exponentOf(Monomial& m, Var v) {
    switch (v) {
        case Var::S: return m.sExp;
        case Var::Q: return m.qExp;
        case Var::X: break;
    }
    return m.xExp;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& constant) {
    if (!constant.isZero()) terms_.emplace(Monomial{}, constant);
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& coeff) {
    MultiPoly p;
    if (!coeff.isZero()) p.terms_.emplace(m, coeff);
    return p;
}

MultiPoly MultiPoly::variable(Var v) {
    Monomial m;
    exponentOf(m, v) = 1;
    return term(m, Rational(1));
}

bool MultiPoly::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational MultiPoly::constantValue() const {
    if (terms_.empty()) return Rational(0);
    if (!isConstant()) throw std::invalid_argument("MultiPoly: not a constant");
    return terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree(Var v) const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        int e = exponentOf(m, v);
        if (e > deg) deg = e;
    }
    return deg;
}

void MultiPoly::addTerm(const Monomial& m, const Rational& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        int e = exponentOf(m, v);
        if (e == 0) continue;
        Monomial d = m;
        exponentOf(d, v) = e - 1;
        out.addTerm(d, Rational(e) * c);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const Bindings& b) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        Monomial left = m;
        if (b.x && m.xExp > 0) {
            coeff *= b.x->pow(static_cast<unsigned>(m.xExp));
            left.xExp = 0;
        } else if (b.x) {
            left.xExp = 0;
        }
        if (b.s && m.sExp > 0) {
            coeff *= b.s->pow(static_cast<unsigned>(m.sExp));
            left.sExp = 0;
        } else if (b.s) {
            left.sExp = 0;
        }
        if (b.q && m.qExp > 0) {
            coeff *= b.q->pow(static_cast<unsigned>(m.qExp));
            left.qExp = 0;
        } else if (b.q) {
            left.qExp = 0;
        }
        out.addTerm(left, coeff);
    }
    return out;
}

Rational MultiPoly::evaluate(const Rational& x, const Rational& s, const Rational& q) const {
    return substitute({x, s, q}).constantValue();
}

MultiPoly MultiPoly::timesTerm(const Monomial& m, const Rational& coeff) const {
    MultiPoly out;
    if (coeff.isZero()) return out;
    // Shifting every exponent by the same amount preserves the term order, so
    // the shifted keys can be appended in sequence.
    auto hint = out.terms_.end();
    for (const auto& [mm, c] : terms_) {
        Monomial shifted{mm.xExp + m.xExp, mm.sExp + m.sExp, mm.qExp + m.qExp};
        hint = out.terms_.emplace_hint(hint, shifted, c * coeff);
    }
    return out;
}

MultiPoly MultiPoly::remapSToQSquaredS() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        out.addTerm({m.xExp, m.sExp, m.qExp + 2 * m.sExp}, c);
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    auto hint = out.terms_.end();
    for (const auto& [m, c] : terms_) hint = out.terms_.emplace_hint(hint, m, -c);
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.addTerm(m, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.addTerm(m, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    // Schoolbook product; accumulation through addTerm keeps the result canonical.
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.addTerm({ma.xExp + mb.xExp, ma.sExp + mb.sExp, ma.qExp + mb.qExp}, ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    return p.timesTerm(Monomial{}, c);
}

}  // namespace qcheb
