#ifndef GW_COHOMOLOGY_HPP
#define GW_COHOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

/// Element of H*(P^n, Q) = Q[H]/(H^{n+1}), stored densely: coeffs()[k] is
/// the coefficient of H^k. The relation H^{n+1} = 0 is structural; products
/// simply have no slot to overflow into.
class CohClass {
public:
    explicit CohClass(int ambient_dim);

    static CohClass scalar(int ambient_dim, const Rational& a);
    static CohClass h_power(int ambient_dim, int k, const Rational& a = Rational(1));

    int ambient_dim() const { return n_; }
    const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    void set_coeff(int k, const Rational& a) { c_[static_cast<std::size_t>(k)] = a; }

    bool is_zero() const;

    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    CohClass scaled(const Rational& a) const;

    friend bool operator==(const CohClass& a, const CohClass& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    std::string str() const;

private:
    int n_;
    std::vector<Rational> c_;
};

/// Cup product in Q[H]/(H^{n+1}).
CohClass coh_mul(const CohClass& a, const CohClass& b);

/// Evaluation against the fundamental class of P^n: the H^n coefficient.
Rational coh_integrate(const CohClass& a);

struct TopChernResult {
    CohClass value;
    /// Set when rank(E) exceeds n, in which case the class vanishes for
    /// degree reasons and value is zero.
    bool degree_overflow = false;
};

/// Top Chern class of O(l_1) + ... + O(l_r) on P^n: (prod l_i) H^r.
TopChernResult ctop_split(const std::vector<int>& degrees, int ambient_dim);

/// Finite Laurent polynomial in hbar with CohClass coefficients. Sparse over
/// the hbar exponent; zero coefficients are never stored.
class HLaurent {
public:
    explicit HLaurent(int ambient_dim);

    static HLaurent zero(int ambient_dim) { return HLaurent(ambient_dim); }
    static HLaurent one(int ambient_dim);
    /// c*H + m*hbar.
    static HLaurent linear(int c, int m, int ambient_dim);
    /// cls * hbar^k.
    static HLaurent term(const CohClass& cls, int hbar_exp);

    int ambient_dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, CohClass>& terms() const { return terms_; }

    /// CohClass coefficient of hbar^k (zero class if absent).
    CohClass coeff(int hbar_exp) const;
    void add_term(int hbar_exp, const CohClass& cls);

    int min_hbar_exp() const;
    int max_hbar_exp() const;

    HLaurent& operator+=(const HLaurent& o);
    HLaurent& operator-=(const HLaurent& o);
    friend HLaurent operator+(HLaurent a, const HLaurent& b) { return a += b; }
    friend HLaurent operator-(HLaurent a, const HLaurent& b) { return a -= b; }
    HLaurent scaled(const Rational& a) const;
    HLaurent scaled_class(const CohClass& cls) const;

    friend bool operator==(const HLaurent& a, const HLaurent& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int n_;
    std::map<int, CohClass> terms_;
};

/// Bilinear convolution over hbar exponents with coh_mul on coefficients.
HLaurent hl_mul(const HLaurent& a, const HLaurent& b);

/// Exact expansion of (c*H + m*hbar)^{-1}, finite because H^{n+1} = 0:
///   sum_{j=0..n} (-c)^j H^j / (m^{j+1} hbar^{j+1}).
/// Requires m >= 1.
HLaurent hl_linear_inverse(int c, int m, int ambient_dim);

}  // namespace gw

#endif
