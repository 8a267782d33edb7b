#include "gw/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gw {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw std::domain_error("rational: zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class v;
    if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
    if (sgn(mpq_class(v.get_den())) == 0) {
        throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    }
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("rational: division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("rational: reciprocal of zero");
    }
    return Rational(1) / *this;
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        return reciprocal().pow(-e);
    }
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational factorial(long n) {
    if (n < 0) {
        throw std::domain_error("factorial of negative integer");
    }
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational::from_string(f.get_str());
}

Rational binomial(long n, long k) {
    if (n < 0) {
        throw std::domain_error("binomial with negative n");
    }
    if (k < 0 || k > n) {
        return Rational(0);
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational::from_string(b.get_str());
}

}  // namespace gw
