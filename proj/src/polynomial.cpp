#include "wronsk/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace wronsk {

Polynomial::Polynomial(int dimension) : dimension_(dimension) {
    if (dimension < 1) throw std::invalid_argument("polynomial over dimension < 1");
}

Polynomial Polynomial::constant(int dimension, Rational c) {
    Polynomial p(dimension);
    p.add_term(MultiIndex::zero(dimension), c);
    return p;
}

Polynomial Polynomial::monomial(MultiIndex exponents, Rational coeff) {
    Polynomial p(exponents.dimension());
    p.add_term(exponents, coeff);
    return p;
}

Polynomial Polynomial::variable(int dimension, int axis) {
    return monomial(MultiIndex::unit(dimension, axis));
}

Rational Polynomial::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.order();
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.dimension() != dimension_)
        throw std::invalid_argument("monomial dimension does not match polynomial dimension");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::require_same_dimension(const Polynomial& o) const {
    if (dimension_ != o.dimension_)
        throw std::invalid_argument("polynomial dimension mismatch: " + std::to_string(dimension_) +
                                    " vs " + std::to_string(o.dimension_));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(dimension_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_dimension(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_dimension(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_dimension(b);
    Polynomial r(a.dimension_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.plus(mb), ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, Polynomial p) {
    if (c.is_zero()) return Polynomial::zero(p.dimension_);
    for (auto& [m, coeff] : p.terms_) coeff *= c;
    return p;
}

Polynomial Polynomial::partial(int axis) const {
    if (axis < 0 || axis >= dimension_)
        throw std::invalid_argument("partial derivative axis out of range: " + std::to_string(axis));
    Polynomial r(dimension_);
    for (const auto& [m, c] : terms_) {
        const std::uint32_t e = m[axis];
        if (e == 0) continue;
        std::vector<std::uint32_t> shifted = m.entries();
        shifted[static_cast<std::size_t>(axis)] = e - 1;
        r.add_term(MultiIndex(std::move(shifted)), c * Rational(static_cast<long>(e)));
    }
    return r;
}

Polynomial Polynomial::derive(const MultiIndex& sigma) const {
    if (sigma.dimension() != dimension_)
        throw std::invalid_argument("derivative multi-index dimension mismatch");
    Polynomial r(dimension_);
    for (const auto& [m, c] : terms_) {
        if (!sigma.leq(m)) continue;
        Rational factor(1);
        for (int a = 0; a < dimension_; ++a)
            for (std::uint32_t e = m[a] - sigma[a] + 1; e <= m[a]; ++e)
                factor *= Rational(static_cast<long>(e));
        r.add_term(m.minus(sigma), c * factor);
    }
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    require_same_dimension(divisor);
    if (divisor.is_zero()) throw std::domain_error("exact division by the zero polynomial");
    Polynomial quotient(dimension_);
    Polynomial rem = *this;
    const auto& [lm, lc] = *divisor.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        if (!lm.leq(rm)) throw std::domain_error("polynomial division is not exact");
        Polynomial t = monomial(rm.minus(lm), rc / lc);
        quotient += t;
        rem -= t * divisor;
    }
    return quotient;
}

std::string variable_name(int dimension, int axis) {
    if (dimension <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[axis];
    }
    return "x" + std::to_string(axis + 1);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Rational abs_c = negative ? -c : c;
        std::string factors;
        for (int a = 0; a < dimension_; ++a) {
            const std::uint32_t e = m[a];
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += variable_name(dimension_, a);
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out << abs_c.str();
        } else if (abs_c == Rational(1)) {
            out << factors;
        } else {
            out << abs_c.str() << "*" << factors;
        }
    }
    return out.str();
}

}  // namespace wronsk
