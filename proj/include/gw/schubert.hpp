#ifndef GW_SCHUBERT_HPP
#define GW_SCHUBERT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

/// Element of H*(G(2,m), Q) in the Schubert basis sigma_{a,b},
/// m-2 >= a >= b >= 0. Zero terms are never stored.
class SchubertElt {
public:
    explicit SchubertElt(int m);

    static SchubertElt zero(int m) { return SchubertElt(m); }
    static SchubertElt one(int m) { return sigma(m, 0, 0); }
    static SchubertElt sigma(int m, int a, int b = 0);

    int m() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

    Rational coeff(int a, int b) const;
    /// Adds c * sigma_{a,b}; silently drops partitions outside the box.
    void add_term(int a, int b, const Rational& c);

    SchubertElt& operator+=(const SchubertElt& o);
    friend SchubertElt operator+(SchubertElt a, const SchubertElt& b) { return a += b; }
    SchubertElt scaled(const Rational& c) const;

    friend bool operator==(const SchubertElt& a, const SchubertElt& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int m_;
    std::map<std::pair<int, int>, Rational> terms_;
};

/// Pieri rule: multiplication by the special class sigma_k, truncated to the
/// (m-2) x 2 box.
SchubertElt pieri_mul(const SchubertElt& x, int k);

/// Full product, via the two-row Giambelli determinant
/// sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}.
SchubertElt schubert_mul(const SchubertElt& x, const SchubertElt& y);

/// c_{l+1}(Sym^l S*) on G(2,m), where S* is the dual tautological bundle with
/// Chern roots x1, x2 (e1 = sigma_1, e2 = sigma_{1,1}): the product
/// prod_{k=0..l} (k x1 + (l-k) x2) expanded in the Schubert ring.
SchubertElt chern_top_sym(int l, int m);

/// Integration over G(2,m): the coefficient of sigma_{m-2,m-2}.
Rational grass_integrate(const SchubertElt& x);

struct LineCountResult {
    Rational value;
    /// True when l+1 = 2(n-1), the condition for a finite expected count.
    bool dimension_match = true;
};

/// Count of lines on a generic degree-l hypersurface in P^n, computed as
/// the Euler number of Sym^l S* over G(2,n+1). When the dimensions do not
/// match the value is 0 and dimension_match is cleared.
LineCountResult lines_on_hypersurface(int l, int n);

}  // namespace gw

#endif
