#include "wronsk/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace wronsk {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_integer_string(const std::string& digits) {
    try {
        return Rational(mpq_class(mpz_class(digits, 10)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: '" + digits + "'");
    }
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::fits_long() const {
    return v_.get_den() == 1 && v_.get_num().fits_slong_p();
}

long Rational::to_long() const {
    if (!fits_long()) throw std::domain_error("rational does not fit a long: " + str());
    return v_.get_num().get_si();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wronsk
