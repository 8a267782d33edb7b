#include "gw/mirror.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace gw {

void GeometrySpec::validate() const {
    if (ambient_dim < 1) {
        throw std::invalid_argument("GeometrySpec: ambient dimension must be >= 1");
    }
    if (trunc_order < 0) {
        throw std::invalid_argument("GeometrySpec: negative truncation order");
    }
    for (int l : bundle_degrees) {
        if (l < 1) {
            throw std::invalid_argument("GeometrySpec: bundle degrees must be >= 1");
        }
    }
    if (degree_sum() > ambient_dim + 1) {
        throw std::invalid_argument(
            "GeometrySpec: sum of bundle degrees exceeds n+1 (zero locus not Fano/Calabi-Yau)");
    }
}

int GeometrySpec::degree_sum() const {
    int s = 0;
    for (int l : bundle_degrees) {
        s += l;
    }
    return s;
}

CohClass GeometrySpec::top_chern() const {
    return ctop_split(bundle_degrees, ambient_dim).value;
}

namespace {

/// hbar-degree -(n+1) factor prod (H + d hbar)^{-(n+1)} appended per step.
HLaurent denominator_step(int d, int n) {
    const HLaurent inv = hl_linear_inverse(1, d, n);
    HLaurent p = inv;
    for (int k = 1; k < n + 1; ++k) {
        p = hl_mul(p, inv);
    }
    return p;
}

}  // namespace

JSeries j_projective(int ambient_dim, int trunc_order) {
    if (ambient_dim < 1) {
        throw std::invalid_argument("j_projective: ambient dimension must be >= 1");
    }
    QSeries out(ambient_dim, trunc_order);
    HLaurent cur = HLaurent::one(ambient_dim);
    out.set_coeff(0, cur);
    for (int d = 1; d <= trunc_order; ++d) {
        cur = hl_mul(cur, denominator_step(d, ambient_dim));
        out.set_coeff(d, cur);
    }
    return {std::move(out), JForm::reduced_j};
}

QSeries i_function_uncapped(const GeometrySpec& spec) {
    spec.validate();
    const int n = spec.ambient_dim;
    const int D = spec.trunc_order;
    QSeries out(n, D);
    HLaurent cur = HLaurent::one(n);
    out.set_coeff(0, cur);
    for (int d = 1; d <= D; ++d) {
        cur = hl_mul(cur, denominator_step(d, n));
        for (int l : spec.bundle_degrees) {
            for (int m = l * (d - 1) + 1; m <= l * d; ++m) {
                cur = hl_mul(cur, HLaurent::linear(l, m, n));
            }
        }
        out.set_coeff(d, cur);
    }
    return out;
}

JSeries i_function(const GeometrySpec& spec) {
    return {i_function_uncapped(spec).scaled_class(spec.top_chern()), JForm::capped_i};
}

namespace {

void check_j_form(const QSeries& s, const CohClass& constant_class, const char* what) {
    if (!(s.coeff(0) == HLaurent::term(constant_class, 0))) {
        throw std::logic_error(std::string(what) + ": q^0 coefficient is not the constant class");
    }
    for (int d = 0; d <= s.order(); ++d) {
        if (!s.coeff(d).coeff(-1).is_zero()) {
            throw std::logic_error(std::string(what) + ": hbar^{-1} part does not vanish");
        }
    }
    if (s.max_hbar_exp() > 0) {
        throw std::logic_error(std::string(what) + ": positive hbar exponent in a final J-series");
    }
}

}  // namespace

NormalizeResult normalize(const JSeries& capped_i, const GeometrySpec& spec) {
    spec.validate();
    const int n = spec.ambient_dim;
    const int D = spec.trunc_order;
    const CohClass ctop = spec.top_chern();

    if (capped_i.form_tag == JForm::normalized_je) {
        check_j_form(capped_i.payload, ctop, "normalize(normalized input)");
        return {capped_i, ScalarSeries(D), ScalarSeries(D),
                ScalarSeries::constant(D, Rational(1))};
    }
    if (capped_i.form_tag != JForm::capped_i) {
        throw std::invalid_argument("normalize: input must be a capped I-series");
    }

    const QSeries uncapped = i_function_uncapped(spec);
    if (!(uncapped.scaled_class(ctop) == capped_i.payload)) {
        throw std::invalid_argument("normalize: input does not match the I-series of this geometry");
    }

    const ScalarSeries unit_f = uncapped.slot(0, 0);
    const ScalarSeries shift_g0 = uncapped.slot(-1, 0);
    if (!(unit_f.coeff(0) == Rational(1))) {
        throw std::logic_error("normalize: hypergeometric unit part has F(0) != 1");
    }

    // (i) divide by F; every (hbar, H) slot is rescaled by the same unit.
    QSeries s = uncapped.scaled_series(unit_f.reciprocal());
    // (ii) kill the scalar hbar^{-1} slot, now g_0/F.
    s = qs_mul(s, exp_scalar_over_hbar(s.slot(-1, 0).scaled(Rational(-1)), n));
    // (iii) mirror map Q = q e^f from the divisor hbar^{-1} slot.
    const ScalarSeries mirror_map = s.slot(-1, 1);
    s = qs_mul(s, exp_class_over_hbar(mirror_map.scaled(Rational(-1)),
                                      CohClass::h_power(n, 1)));
    ScalarSeries q_of_big_q = ScalarSeries::identity(D);
    if (!mirror_map.is_zero()) {
        const ScalarSeries ef = scalar_exp(mirror_map);
        ScalarSeries big_q(D);
        for (int d = 1; d <= D; ++d) {
            big_q.set_coeff(d, ef.coeff(d - 1));
        }
        q_of_big_q = scalar_revert(big_q);
        s = s.substituted(q_of_big_q);
    }
    // (iv) re-cap with c_top(E).
    QSeries je = s.scaled_class(ctop);
    check_j_form(je, ctop, "normalize");
    return {JSeries{std::move(je), JForm::normalized_je}, mirror_map, shift_g0, unit_f};
}

EmbeddingModel EmbeddingModel::from_name(const std::string& name) {
    if (name == "line") {
        return line();
    }
    if (name == "conic") {
        return conic();
    }
    throw std::invalid_argument("EmbeddingModel: unknown model '" + name + "'");
}

void EmbeddingModel::validate() const {
    if (bundle_degree != 1 && bundle_degree != 2) {
        throw std::invalid_argument("EmbeddingModel: degree must be 1 (line) or 2 (conic)");
    }
}

QSeries pushforward(const EmbeddingModel& model, const JSeries& jy, int trunc_order) {
    model.validate();
    if (jy.form_tag != JForm::reduced_j || jy.payload.ambient_dim() != 1) {
        throw std::invalid_argument("pushforward: expected the reduced J-series of P^1");
    }
    const int e = model.bundle_degree;
    QSeries out(2, trunc_order);
    for (int b = 0; b <= jy.payload.order() && e * b <= trunc_order; ++b) {
        HLaurent image(2);
        for (const auto& [k, cls] : jy.payload.coeff(b).terms()) {
            // i_*(a0 + a1 omega) = a0 e H + a1 H^2.
            CohClass pushed(2);
            pushed.set_coeff(1, cls.coeff(0) * Rational(e));
            pushed.set_coeff(2, cls.coeff(1));
            image.add_term(k, pushed);
        }
        out.set_coeff(e * b, image);
    }
    return out;
}

namespace {

std::vector<Mismatch> qseries_mismatches(const QSeries& lhs, const QSeries& rhs) {
    std::vector<Mismatch> out;
    const int D = std::min(lhs.order(), rhs.order());
    for (int d = 0; d <= D; ++d) {
        std::set<int> exps;
        for (const auto& [k, cls] : lhs.coeff(d).terms()) {
            exps.insert(k);
        }
        for (const auto& [k, cls] : rhs.coeff(d).terms()) {
            exps.insert(k);
        }
        for (int k : exps) {
            const CohClass a = lhs.coeff(d).coeff(k);
            const CohClass b = rhs.coeff(d).coeff(k);
            for (int p = 0; p <= lhs.ambient_dim(); ++p) {
                if (a.coeff(p) != b.coeff(p)) {
                    out.push_back({d, k, p, a.coeff(p), b.coeff(p)});
                }
            }
        }
    }
    return out;
}

}  // namespace

VerificationReport verify_mirror_identity(const EmbeddingModel& model, int order) {
    model.validate();
    const int e = model.bundle_degree;
    const JSeries jy = j_projective(1, order / e);
    const QSeries lhs = pushforward(model, jy, order);
    const GeometrySpec spec = model.geometry(order);
    const QSeries rhs = normalize(i_function(spec), spec).je.payload;

    VerificationReport report;
    report.model = model.name();
    report.order = order;
    report.mismatches = qseries_mismatches(lhs, rhs);
    report.verified = report.mismatches.empty();
    return report;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["model"] = model;
    j["order"] = order;
    j["status"] = verified ? "verified" : "mismatch";
    j["mismatches"] = nlohmann::json::array();
    for (const auto& m : mismatches) {
        j["mismatches"].push_back({{"d", m.q_degree},
                                   {"hbar_exp", m.hbar_exp},
                                   {"h_power", m.h_power},
                                   {"lhs", m.lhs.str()},
                                   {"rhs", m.rhs.str()}});
    }
    return j.dump();
}

int expected_dim(int ambient_dim, int genus, int npts, int curve_degree) {
    if (genus != 0) {
        throw std::domain_error("expected_dim: only genus 0 is supported");
    }
    if (curve_degree < 0) {
        throw std::invalid_argument("expected_dim: negative curve degree");
    }
    return (ambient_dim - 3) + npts + (ambient_dim + 1) * curve_degree;
}

int ed_rank(const GeometrySpec& spec, int curve_degree, bool pointed) {
    if (curve_degree < 0) {
        throw std::invalid_argument("ed_rank: negative curve degree");
    }
    int r = 0;
    for (int l : spec.bundle_degrees) {
        r += l * curve_degree + (pointed ? 0 : 1);
    }
    return r;
}

std::vector<Mismatch> je_degree_violations(const JSeries& je, const GeometrySpec& spec) {
    spec.validate();
    const int n = spec.ambient_dim;
    const int r = spec.rank();
    std::vector<Mismatch> bad;
    const Rational zero(0);
    for (int d = 0; d <= je.payload.order(); ++d) {
        for (const auto& [k, cls] : je.payload.coeff(d).terms()) {
            for (int p = 0; p <= n; ++p) {
                if (cls.coeff(p).is_zero()) {
                    continue;
                }
                if (d == 0) {
                    if (k != 0 || p != r) {
                        bad.push_back({d, k, p, cls.coeff(p), zero});
                    }
                    continue;
                }
                // e_*(c_top(E'_d) c^{m} / ...) with m = -k-2 has homological
                // degree vdim - rank E'_d - m; capping adds r to the H-power.
                const int m = -k - 2;
                const int vdim = expected_dim(n, 0, 1, d);
                const int expect_p = n - (vdim - ed_rank(spec, d, true) - m) + r;
                if (m < 0 || p != expect_p) {
                    bad.push_back({d, k, p, cls.coeff(p), zero});
                }
            }
        }
    }
    return bad;
}

}  // namespace gw
