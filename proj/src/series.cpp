#include "gw/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gw {

namespace {

void require_substitution(const ScalarSeries& u) {
    if (!u.coeff(0).is_zero() || u.order() < 1 || u.coeff(1).is_zero()) {
        throw std::invalid_argument("substitution must be of the form q*unit");
    }
}

}  // namespace

ScalarSeries::ScalarSeries(int trunc_order) {
    if (trunc_order < 0) {
        throw std::invalid_argument("ScalarSeries: negative truncation order");
    }
    c_.assign(static_cast<std::size_t>(trunc_order) + 1, Rational(0));
}

ScalarSeries::ScalarSeries(int trunc_order, std::vector<Rational> coeffs)
    : ScalarSeries(trunc_order) {
    for (std::size_t d = 0; d < coeffs.size() && d < c_.size(); ++d) {
        c_[d] = coeffs[d];
    }
}

ScalarSeries ScalarSeries::constant(int trunc_order, const Rational& a) {
    ScalarSeries r(trunc_order);
    r.c_[0] = a;
    return r;
}

ScalarSeries ScalarSeries::identity(int trunc_order) {
    ScalarSeries r(trunc_order);
    if (trunc_order >= 1) {
        r.c_[1] = Rational(1);
    }
    return r;
}

const Rational& ScalarSeries::coeff(int d) const {
    static const Rational zero(0);
    if (d < 0 || d > order()) {
        return zero;
    }
    return c_[static_cast<std::size_t>(d)];
}

void ScalarSeries::set_coeff(int d, const Rational& a) {
    if (d < 0 || d > order()) {
        throw std::out_of_range("ScalarSeries::set_coeff: index beyond truncation order");
    }
    c_[static_cast<std::size_t>(d)] = a;
}

bool ScalarSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& a) { return a.is_zero(); });
}

ScalarSeries ScalarSeries::truncated(int new_order) const {
    ScalarSeries r(new_order);
    for (int d = 0; d <= std::min(new_order, order()); ++d) {
        r.c_[static_cast<std::size_t>(d)] = coeff(d);
    }
    return r;
}

ScalarSeries& ScalarSeries::operator+=(const ScalarSeries& o) {
    *this = truncated(std::min(order(), o.order()));
    for (int d = 0; d <= order(); ++d) {
        c_[static_cast<std::size_t>(d)] += o.coeff(d);
    }
    return *this;
}

ScalarSeries& ScalarSeries::operator-=(const ScalarSeries& o) {
    *this = truncated(std::min(order(), o.order()));
    for (int d = 0; d <= order(); ++d) {
        c_[static_cast<std::size_t>(d)] -= o.coeff(d);
    }
    return *this;
}

ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b) {
    const int D = std::min(a.order(), b.order());
    ScalarSeries r(D);
    for (int i = 0; i <= D; ++i) {
        if (a.coeff(i).is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= D; ++j) {
            r.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

ScalarSeries ScalarSeries::scaled(const Rational& a) const {
    ScalarSeries r(order());
    for (int d = 0; d <= order(); ++d) {
        r.c_[static_cast<std::size_t>(d)] = coeff(d) * a;
    }
    return r;
}

ScalarSeries ScalarSeries::reciprocal() const {
    if (coeff(0).is_zero()) {
        throw std::domain_error("ScalarSeries::reciprocal: zero constant term");
    }
    const int D = order();
    ScalarSeries r(D);
    const Rational inv0 = coeff(0).reciprocal();
    r.c_[0] = inv0;
    for (int d = 1; d <= D; ++d) {
        Rational acc(0);
        for (int j = 1; j <= d; ++j) {
            acc += coeff(j) * r.coeff(d - j);
        }
        r.c_[static_cast<std::size_t>(d)] = -acc * inv0;
    }
    return r;
}

ScalarSeries ScalarSeries::one_plus_q_dlog() const {
    ScalarSeries r(order());
    r.c_[0] = Rational(1);
    for (int d = 1; d <= order(); ++d) {
        r.c_[static_cast<std::size_t>(d)] = coeff(d) * Rational(d);
    }
    return r;
}

std::string ScalarSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= order(); ++d) {
        if (coeff(d).is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << coeff(d).str();
        if (d >= 1) {
            os << "*q" << (d > 1 ? "^" + std::to_string(d) : "");
        }
    }
    if (first) {
        os << "0";
    }
    return os.str();
}

ScalarSeries scalar_compose(const ScalarSeries& a, const ScalarSeries& u) {
    require_substitution(u);
    const int D = std::min(a.order(), u.order());
    const ScalarSeries ut = u.truncated(D);
    // Horner evaluation of a at u.
    ScalarSeries r = ScalarSeries::constant(D, a.coeff(a.order() <= D ? a.order() : D));
    for (int d = std::min(a.order(), D) - 1; d >= 0; --d) {
        r = r * ut;
        r.set_coeff(0, r.coeff(0) + a.coeff(d));
    }
    return r;
}

ScalarSeries scalar_revert(const ScalarSeries& w) {
    if (!w.coeff(0).is_zero()) {
        throw std::domain_error("scalar_revert: nonzero constant term");
    }
    if (w.order() < 1 || w.coeff(1).is_zero()) {
        throw std::domain_error("scalar_revert: zero linear coefficient, series not invertible");
    }
    const int D = w.order();
    const ScalarSeries id = ScalarSeries::identity(D);
    if (D == 1) {
        return id.scaled(w.coeff(1).reciprocal());
    }
    // w'(q), order D-1 is enough but keep order D for uniform arithmetic.
    ScalarSeries wp(D);
    for (int d = 1; d <= D; ++d) {
        wp.set_coeff(d - 1, w.coeff(d) * Rational(d));
    }
    ScalarSeries v = id.scaled(w.coeff(1).reciprocal());
    // Newton on F(v) = w(v) - q; correct order doubles each step.
    int correct = 1;
    while (correct < D) {
        ScalarSeries err = scalar_compose(w, v) - id;
        ScalarSeries deriv = scalar_compose(wp, v);
        v -= err * deriv.reciprocal();
        correct *= 2;
    }
    if (!(scalar_compose(w, v) == id)) {
        throw std::logic_error("scalar_revert: Newton iteration failed to converge");
    }
    return v;
}

ScalarSeries scalar_exp(const ScalarSeries& a) {
    if (!a.coeff(0).is_zero()) {
        throw std::domain_error("scalar_exp: nonzero constant term");
    }
    const int D = a.order();
    ScalarSeries r = ScalarSeries::constant(D, Rational(1));
    ScalarSeries pw = ScalarSeries::constant(D, Rational(1));
    Rational fact(1);
    for (int k = 1; k <= D; ++k) {
        pw = pw * a;
        fact *= Rational(k);
        r += pw.scaled(fact.reciprocal());
    }
    return r;
}

QSeries::QSeries(int ambient_dim, int trunc_order) : n_(ambient_dim) {
    if (trunc_order < 0) {
        throw std::invalid_argument("QSeries: negative truncation order");
    }
    c_.assign(static_cast<std::size_t>(trunc_order) + 1, HLaurent(ambient_dim));
}

QSeries QSeries::one(int ambient_dim, int trunc_order) {
    QSeries r(ambient_dim, trunc_order);
    r.c_[0] = HLaurent::one(ambient_dim);
    return r;
}

const HLaurent& QSeries::coeff(int d) const {
    if (d < 0 || d > order()) {
        throw std::out_of_range("QSeries::coeff: index beyond truncation order");
    }
    return c_[static_cast<std::size_t>(d)];
}

void QSeries::set_coeff(int d, const HLaurent& h) {
    if (d < 0 || d > order()) {
        throw std::out_of_range("QSeries::set_coeff: index beyond truncation order");
    }
    if (h.ambient_dim() != n_) {
        throw std::invalid_argument("QSeries::set_coeff: ambient dimension mismatch");
    }
    c_[static_cast<std::size_t>(d)] = h;
}

QSeries QSeries::truncated(int new_order) const {
    QSeries r(n_, new_order);
    for (int d = 0; d <= std::min(new_order, order()); ++d) {
        r.c_[static_cast<std::size_t>(d)] = c_[static_cast<std::size_t>(d)];
    }
    return r;
}

QSeries QSeries::scaled(const Rational& a) const {
    QSeries r(n_, order());
    for (int d = 0; d <= order(); ++d) {
        r.c_[static_cast<std::size_t>(d)] = c_[static_cast<std::size_t>(d)].scaled(a);
    }
    return r;
}

QSeries QSeries::scaled_class(const CohClass& cls) const {
    QSeries r(n_, order());
    for (int d = 0; d <= order(); ++d) {
        r.c_[static_cast<std::size_t>(d)] = c_[static_cast<std::size_t>(d)].scaled_class(cls);
    }
    return r;
}

QSeries QSeries::scaled_series(const ScalarSeries& s) const {
    const int D = std::min(order(), s.order());
    QSeries r(n_, D);
    for (int i = 0; i <= D; ++i) {
        if (s.coeff(i).is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= D; ++j) {
            r.c_[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(j)].scaled(s.coeff(i));
        }
    }
    return r;
}

ScalarSeries QSeries::slot(int hbar_exp, int h_power) const {
    ScalarSeries r(order());
    for (int d = 0; d <= order(); ++d) {
        r.set_coeff(d, coeff(d).coeff(hbar_exp).coeff(h_power));
    }
    return r;
}

QSeries QSeries::substituted(const ScalarSeries& u) const {
    require_substitution(u);
    const int D = std::min(order(), u.order());
    QSeries r(n_, D);
    bool any = false;
    int kmin = 0;
    int kmax = 0;
    for (const auto& h : c_) {
        if (!h.is_zero()) {
            kmin = any ? std::min(kmin, h.min_hbar_exp()) : h.min_hbar_exp();
            kmax = any ? std::max(kmax, h.max_hbar_exp()) : h.max_hbar_exp();
            any = true;
        }
    }
    if (!any) {
        return r;
    }
    // Decompose into (hbar, H) slots, compose each scalar component, rebuild.
    for (int k = kmin; k <= kmax; ++k) {
        for (int p = 0; p <= n_; ++p) {
            ScalarSeries s = slot(k, p).truncated(D);
            if (s.is_zero()) {
                continue;
            }
            ScalarSeries cs = scalar_compose(s, u);
            for (int d = 0; d <= D; ++d) {
                if (!cs.coeff(d).is_zero()) {
                    r.c_[static_cast<std::size_t>(d)].add_term(
                        k, CohClass::h_power(n_, p, cs.coeff(d)));
                }
            }
        }
    }
    return r;
}

int QSeries::max_hbar_exp() const {
    bool any = false;
    int m = 0;
    for (const auto& h : c_) {
        if (!h.is_zero()) {
            m = any ? std::max(m, h.max_hbar_exp()) : h.max_hbar_exp();
            any = true;
        }
    }
    if (!any) {
        throw std::logic_error("QSeries::max_hbar_exp on zero series");
    }
    return m;
}

std::string QSeries::dump() const {
    std::ostringstream os;
    for (int d = 0; d <= order(); ++d) {
        for (const auto& [k, cls] : coeff(d).terms()) {
            for (int p = 0; p <= n_; ++p) {
                if (!cls.coeff(p).is_zero()) {
                    os << d << " " << k << " " << p << " " << cls.coeff(p).str() << "\n";
                }
            }
        }
    }
    return os.str();
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument("qs_add: ambient dimension mismatch");
    }
    const int D = std::min(a.order(), b.order());
    QSeries r(a.ambient_dim(), D);
    for (int d = 0; d <= D; ++d) {
        r.set_coeff(d, a.coeff(d) + b.coeff(d));
    }
    return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument("qs_mul: ambient dimension mismatch");
    }
    const int D = std::min(a.order(), b.order());
    QSeries r(a.ambient_dim(), D);
    for (int d = 0; d <= D; ++d) {
        HLaurent acc(a.ambient_dim());
        for (int i = 0; i <= d; ++i) {
            acc += hl_mul(a.coeff(i), b.coeff(d - i));
        }
        r.set_coeff(d, acc);
    }
    return r;
}

QSeries exp_scalar_over_hbar(const ScalarSeries& a, int ambient_dim) {
    return exp_class_over_hbar(a, CohClass::scalar(ambient_dim, Rational(1)));
}

QSeries exp_class_over_hbar(const ScalarSeries& a, const CohClass& cls) {
    if (!a.coeff(0).is_zero()) {
        throw std::domain_error("exp over hbar: nonzero constant term does not converge q-adically");
    }
    const int n = cls.ambient_dim();
    const int D = a.order();
    QSeries r = QSeries::one(n, D);
    ScalarSeries pw = ScalarSeries::constant(D, Rational(1));
    CohClass cls_pow = CohClass::scalar(n, Rational(1));
    Rational fact(1);
    for (int k = 1; k <= D; ++k) {
        pw = pw * a;
        cls_pow = coh_mul(cls_pow, cls);
        if (cls_pow.is_zero() || pw.is_zero()) {
            break;
        }
        fact *= Rational(k);
        const CohClass contrib = cls_pow.scaled(fact.reciprocal());
        for (int d = k; d <= D; ++d) {
            if (!pw.coeff(d).is_zero()) {
                HLaurent h = r.coeff(d);
                h.add_term(-k, contrib.scaled(pw.coeff(d)));
                r.set_coeff(d, h);
            }
        }
    }
    return r;
}

}  // namespace gw
