#pragma once

#include <map>
#include <string>
#include <vector>

#include "wronsk/multi_index.hpp"
#include "wronsk/rational.hpp"

namespace wronsk {

// Sparse multivariate polynomial over the exact rationals. Terms map monomial
// exponent vectors to nonzero coefficients; the map is kept in descending
// graded-lex order, so begin() is the leading term and iteration order is the
// canonical printing order. Values are immutable in spirit: every operation
// returns a fresh polynomial in canonical form.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, GrlexGreater>;

    // The zero polynomial over dimension d >= 1.
    explicit Polynomial(int dimension);

    static Polynomial zero(int dimension) { return Polynomial(dimension); }
    static Polynomial constant(int dimension, Rational c);
    static Polynomial monomial(MultiIndex exponents, Rational coeff = Rational(1));
    // The coordinate function x_{axis+1}; axis is 0-based.
    static Polynomial variable(int dimension, int axis);

    int dimension() const { return dimension_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const MultiIndex& m) const;
    // Maximum total degree over the terms; 0 for the zero polynomial.
    std::uint32_t total_degree() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, Polynomial p);

    // Formal partial derivative along one 0-based axis.
    Polynomial partial(int axis) const;
    // Iterated mixed partial d^|sigma| / dx^sigma.
    Polynomial derive(const MultiIndex& sigma) const;

    // Exact quotient; throws std::domain_error when the division is not exact.
    Polynomial divide_exact(const Polynomial& divisor) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Canonical text rendering: terms in descending graded-lex order,
    // coefficients as n or n/m, variables x,y,z for d <= 3 and x1..xd
    // otherwise, explicit '*' and '^'. Examples: "0", "2*x^2*y - 1/3".
    std::string str() const;

private:
    void add_term(const MultiIndex& m, const Rational& c);
    void require_same_dimension(const Polynomial& o) const;

    int dimension_;
    TermMap terms_;
};

// Name of the coordinate along a 0-based axis: x,y,z when d <= 3, else x1..xd.
std::string variable_name(int dimension, int axis);

}  // namespace wronsk
