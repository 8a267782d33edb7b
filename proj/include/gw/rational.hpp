#ifndef GW_RATIONAL_HPP
#define GW_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace gw {

/// Exact rational number, always kept in canonical form: lowest terms,
/// positive denominator, zero represented as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den);

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
    /// or zero denominator.
    static Rational from_string(const std::string& s);

    /// Canonical textual form: "p/q", or "p" when the denominator is 1.
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    Rational reciprocal() const;

    /// Integer power; e may be negative (then *this must be nonzero).
    Rational pow(long e) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// n! as a Rational; n must be >= 0.
Rational factorial(long n);

/// Binomial coefficient C(n, k) for n >= 0.
Rational binomial(long n, long k);

}  // namespace gw

#endif
