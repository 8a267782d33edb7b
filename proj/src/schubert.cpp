#include "gw/schubert.hpp"

#include <sstream>
#include <stdexcept>

namespace gw {

SchubertElt::SchubertElt(int m) : m_(m) {
    if (m < 3) {
        throw std::invalid_argument("SchubertElt: G(2,m) requires m >= 3");
    }
}

SchubertElt SchubertElt::sigma(int m, int a, int b) {
    if (a < b || b < 0) {
        throw std::invalid_argument("SchubertElt::sigma: requires a >= b >= 0");
    }
    SchubertElt r(m);
    r.add_term(a, b, Rational(1));
    return r;
}

Rational SchubertElt::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

void SchubertElt::add_term(int a, int b, const Rational& c) {
    if (c.is_zero() || a > m_ - 2 || a < b || b < 0) {
        return;
    }
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

SchubertElt& SchubertElt::operator+=(const SchubertElt& o) {
    if (m_ != o.m_) {
        throw std::invalid_argument("SchubertElt: Grassmannian mismatch");
    }
    for (const auto& [ab, c] : o.terms_) {
        add_term(ab.first, ab.second, c);
    }
    return *this;
}

SchubertElt SchubertElt::scaled(const Rational& c) const {
    SchubertElt r(m_);
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [ab, x] : terms_) {
        r.terms_.emplace(ab, x * c);
    }
    return r;
}

std::string SchubertElt::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [ab, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << c.str() << "*s[" << ab.first << "," << ab.second << "]";
    }
    return os.str();
}

SchubertElt pieri_mul(const SchubertElt& x, int k) {
    if (k < 0) {
        throw std::invalid_argument("pieri_mul: special class index must be >= 0");
    }
    const int box = x.m() - 2;
    SchubertElt r(x.m());
    for (const auto& [ab, c] : x.terms()) {
        const int a = ab.first;
        const int b = ab.second;
        // Horizontal strips (a',b') / (a,b): a' >= a >= b' >= b, |.| grows by k.
        for (int bp = b; bp <= a; ++bp) {
            const int ap = a + b + k - bp;
            if (ap < a || ap > box || ap < bp) {
                continue;
            }
            r.add_term(ap, bp, c);
        }
    }
    return r;
}

SchubertElt schubert_mul(const SchubertElt& x, const SchubertElt& y) {
    if (x.m() != y.m()) {
        throw std::invalid_argument("schubert_mul: Grassmannian mismatch");
    }
    SchubertElt r(x.m());
    for (const auto& [ab, c] : y.terms()) {
        const int a = ab.first;
        const int b = ab.second;
        // sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}.
        SchubertElt part = pieri_mul(pieri_mul(x, a), b).scaled(c);
        if (b >= 1) {
            part += pieri_mul(pieri_mul(x, a + 1), b - 1).scaled(-c);
        }
        r += part;
    }
    return r;
}

SchubertElt chern_top_sym(int l, int m) {
    if (l < 1) {
        throw std::invalid_argument("chern_top_sym: bundle degree must be >= 1");
    }
    const SchubertElt e1 = SchubertElt::sigma(m, 1, 0);
    const SchubertElt e2 = SchubertElt::sigma(m, 1, 1);
    const SchubertElt e1_sq = schubert_mul(e1, e1);
    SchubertElt r = SchubertElt::one(m);
    // Pair the root k*x1 + (l-k)*x2 with (l-k)*x1 + k*x2:
    //   product = k(l-k) e1^2 + (l-2k)^2 e2.
    for (int k = 0; 2 * k < l; ++k) {
        SchubertElt factor = e1_sq.scaled(Rational(static_cast<long>(k) * (l - k)));
        factor += e2.scaled(Rational(static_cast<long>(l - 2 * k) * (l - 2 * k)));
        r = schubert_mul(r, factor);
    }
    if (l % 2 == 0) {
        // Middle root (l/2)(x1 + x2).
        r = schubert_mul(r, e1.scaled(Rational(l / 2)));
    }
    return r;
}

Rational grass_integrate(const SchubertElt& x) {
    return x.coeff(x.m() - 2, x.m() - 2);
}

LineCountResult lines_on_hypersurface(int l, int n) {
    if (n < 2) {
        throw std::invalid_argument("lines_on_hypersurface: need ambient P^n with n >= 2");
    }
    LineCountResult out;
    out.dimension_match = (l + 1 == 2 * (n - 1));
    out.value = grass_integrate(chern_top_sym(l, n + 1));
    return out;
}

}  // namespace gw
