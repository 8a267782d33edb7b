#include "gw/cohomology.hpp"

#include <sstream>
#include <stdexcept>

namespace gw {

namespace {

void require_same_dim(int a, int b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch");
    }
}

}  // namespace

CohClass::CohClass(int ambient_dim) : n_(ambient_dim) {
    if (ambient_dim < 1) {
        throw std::invalid_argument("CohClass: ambient dimension must be >= 1");
    }
    c_.assign(static_cast<std::size_t>(n_) + 1, Rational(0));
}

CohClass CohClass::scalar(int ambient_dim, const Rational& a) {
    CohClass r(ambient_dim);
    r.c_[0] = a;
    return r;
}

CohClass CohClass::h_power(int ambient_dim, int k, const Rational& a) {
    CohClass r(ambient_dim);
    if (k < 0) {
        throw std::invalid_argument("CohClass: negative H power");
    }
    if (k <= ambient_dim) {
        r.c_[static_cast<std::size_t>(k)] = a;
    }
    return r;
}

bool CohClass::is_zero() const {
    for (const auto& x : c_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

CohClass& CohClass::operator+=(const CohClass& o) {
    require_same_dim(n_, o.n_, "CohClass::operator+=");
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
    require_same_dim(n_, o.n_, "CohClass::operator-=");
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    return *this;
}

CohClass CohClass::scaled(const Rational& a) const {
    CohClass r(n_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        r.c_[k] = c_[k] * a;
    }
    return r;
}

std::string CohClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= n_; ++k) {
        const Rational& a = coeff(k);
        if (a.is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << a.str();
        if (k >= 1) {
            os << "*H" << (k > 1 ? "^" + std::to_string(k) : "");
        }
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

CohClass coh_mul(const CohClass& a, const CohClass& b) {
    require_same_dim(a.ambient_dim(), b.ambient_dim(), "coh_mul");
    const int n = a.ambient_dim();
    CohClass r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) {
                continue;
            }
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

Rational coh_integrate(const CohClass& a) {
    return a.coeff(a.ambient_dim());
}

TopChernResult ctop_split(const std::vector<int>& degrees, int ambient_dim) {
    for (int l : degrees) {
        if (l < 1) {
            throw std::invalid_argument("ctop_split: bundle degrees must be positive");
        }
    }
    const int r = static_cast<int>(degrees.size());
    TopChernResult out{CohClass(ambient_dim), false};
    if (r > ambient_dim) {
        out.degree_overflow = true;
        return out;
    }
    Rational prod(1);
    for (int l : degrees) {
        prod *= Rational(l);
    }
    out.value = CohClass::h_power(ambient_dim, r, prod);
    return out;
}

HLaurent::HLaurent(int ambient_dim) : n_(ambient_dim) {
    if (ambient_dim < 1) {
        throw std::invalid_argument("HLaurent: ambient dimension must be >= 1");
    }
}

HLaurent HLaurent::one(int ambient_dim) {
    HLaurent r(ambient_dim);
    r.terms_.emplace(0, CohClass::scalar(ambient_dim, Rational(1)));
    return r;
}

HLaurent HLaurent::linear(int c, int m, int ambient_dim) {
    HLaurent r(ambient_dim);
    if (c != 0) {
        r.add_term(0, CohClass::h_power(ambient_dim, 1, Rational(c)));
    }
    if (m != 0) {
        r.add_term(1, CohClass::scalar(ambient_dim, Rational(m)));
    }
    return r;
}

HLaurent HLaurent::term(const CohClass& cls, int hbar_exp) {
    HLaurent r(cls.ambient_dim());
    r.add_term(hbar_exp, cls);
    return r;
}

CohClass HLaurent::coeff(int hbar_exp) const {
    auto it = terms_.find(hbar_exp);
    if (it == terms_.end()) {
        return CohClass(n_);
    }
    return it->second;
}

void HLaurent::add_term(int hbar_exp, const CohClass& cls) {
    require_same_dim(n_, cls.ambient_dim(), "HLaurent::add_term");
    auto it = terms_.find(hbar_exp);
    if (it == terms_.end()) {
        if (!cls.is_zero()) {
            terms_.emplace(hbar_exp, cls);
        }
        return;
    }
    it->second += cls;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

int HLaurent::min_hbar_exp() const {
    if (terms_.empty()) {
        throw std::logic_error("HLaurent::min_hbar_exp on zero");
    }
    return terms_.begin()->first;
}

int HLaurent::max_hbar_exp() const {
    if (terms_.empty()) {
        throw std::logic_error("HLaurent::max_hbar_exp on zero");
    }
    return terms_.rbegin()->first;
}

HLaurent& HLaurent::operator+=(const HLaurent& o) {
    require_same_dim(n_, o.n_, "HLaurent::operator+=");
    for (const auto& [k, cls] : o.terms_) {
        add_term(k, cls);
    }
    return *this;
}

HLaurent& HLaurent::operator-=(const HLaurent& o) {
    require_same_dim(n_, o.n_, "HLaurent::operator-=");
    for (const auto& [k, cls] : o.terms_) {
        add_term(k, cls.scaled(Rational(-1)));
    }
    return *this;
}

HLaurent HLaurent::scaled(const Rational& a) const {
    HLaurent r(n_);
    if (a.is_zero()) {
        return r;
    }
    for (const auto& [k, cls] : terms_) {
        r.terms_.emplace(k, cls.scaled(a));
    }
    return r;
}

HLaurent HLaurent::scaled_class(const CohClass& cls) const {
    HLaurent r(n_);
    for (const auto& [k, c] : terms_) {
        r.add_term(k, coh_mul(c, cls));
    }
    return r;
}

std::string HLaurent::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, cls] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << cls.str() << ")";
        if (k != 0) {
            os << "*hbar^" << k;
        }
    }
    return os.str();
}

HLaurent hl_mul(const HLaurent& a, const HLaurent& b) {
    require_same_dim(a.ambient_dim(), b.ambient_dim(), "hl_mul");
    HLaurent r(a.ambient_dim());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            r.add_term(ka + kb, coh_mul(ca, cb));
        }
    }
    return r;
}

HLaurent hl_linear_inverse(int c, int m, int ambient_dim) {
    if (m < 1) {
        throw std::domain_error("hl_linear_inverse: hbar coefficient must be >= 1");
    }
    HLaurent r(ambient_dim);
    Rational coeff = Rational(1, m);
    for (int j = 0; j <= ambient_dim; ++j) {
        r.add_term(-(j + 1), CohClass::h_power(ambient_dim, j, coeff));
        coeff *= Rational(-c, m);
    }
    return r;
}

}  // namespace gw
