#ifndef GW_SERIES_HPP
#define GW_SERIES_HPP

#include <string>
#include <vector>

#include "gw/cohomology.hpp"
#include "gw/rational.hpp"

namespace gw {

/// Truncated power series in q with Rational coefficients, indices 0..order.
class ScalarSeries {
public:
    explicit ScalarSeries(int trunc_order);
    ScalarSeries(int trunc_order, std::vector<Rational> coeffs);

    static ScalarSeries constant(int trunc_order, const Rational& a);
    /// The identity series q.
    static ScalarSeries identity(int trunc_order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int d) const;
    void set_coeff(int d, const Rational& a);
    bool is_zero() const;

    ScalarSeries truncated(int new_order) const;

    ScalarSeries& operator+=(const ScalarSeries& o);
    ScalarSeries& operator-=(const ScalarSeries& o);
    friend ScalarSeries operator+(ScalarSeries a, const ScalarSeries& b) { return a += b; }
    friend ScalarSeries operator-(ScalarSeries a, const ScalarSeries& b) { return a -= b; }
    friend ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b);
    ScalarSeries scaled(const Rational& a) const;

    friend bool operator==(const ScalarSeries& a, const ScalarSeries& b) {
        return a.c_ == b.c_;
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    ScalarSeries reciprocal() const;

    /// 1 + q*(d/dq of *this), i.e. 1 + sum_d d*c_d q^d. The logarithmic
    /// derivative factor d log(q e^{f}) / d log q for f = *this - f(0).
    ScalarSeries one_plus_q_dlog() const;

    std::string str() const;

private:
    std::vector<Rational> c_;
};

/// a evaluated at the substituted variable u; u must be of the form q*unit
/// (zero constant term, nonzero linear term).
ScalarSeries scalar_compose(const ScalarSeries& a, const ScalarSeries& u);

/// Functional inverse: returns v with compose(w, v) = compose(v, w) = q up to
/// the truncation order. Newton iteration on composition; requires a nonzero
/// linear coefficient.
ScalarSeries scalar_revert(const ScalarSeries& w);

/// e^{a(q)} as a truncated series; requires a(0) = 0.
ScalarSeries scalar_exp(const ScalarSeries& a);

/// q-adically truncated Novikov series with HLaurent coefficients.
class QSeries {
public:
    QSeries(int ambient_dim, int trunc_order);

    static QSeries one(int ambient_dim, int trunc_order);

    int ambient_dim() const { return n_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }

    const HLaurent& coeff(int d) const;
    void set_coeff(int d, const HLaurent& h);

    QSeries truncated(int new_order) const;

    QSeries scaled(const Rational& a) const;
    QSeries scaled_class(const CohClass& cls) const;

    /// Multiplication by an hbar-free scalar q-series (Cauchy convolution).
    QSeries scaled_series(const ScalarSeries& s) const;

    /// The scalar q-series sitting at a fixed (hbar exponent, H power) slot.
    ScalarSeries slot(int hbar_exp, int h_power) const;

    /// Per-slot substitution q -> u(q); u must be of the form q*unit.
    QSeries substituted(const ScalarSeries& u) const;

    /// Largest hbar exponent appearing in any coefficient (0 for constants;
    /// series with no terms at all report 0).
    int max_hbar_exp() const;

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    /// Debug dump: one line per (d, hbar exponent, H power, rational), sorted
    /// lexicographically. Golden-file format.
    std::string dump() const;

private:
    int n_;
    std::vector<HLaurent> c_;
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_mul(const QSeries& a, const QSeries& b);

/// e^{a(q)/hbar} with a(0) = 0: the q^d coefficient is
/// sum_{k=0..d} [a^k]_d / (k! hbar^k).
QSeries exp_scalar_over_hbar(const ScalarSeries& a, int ambient_dim);

/// e^{a(q) * cls / hbar}: finite by nilpotency of cls and/or by a(0) = 0.
/// Requires a(0) = 0.
QSeries exp_class_over_hbar(const ScalarSeries& a, const CohClass& cls);

}  // namespace gw

#endif
