#include "gw/selftest.hpp"

#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "gw/cohomology.hpp"
#include "gw/instanton.hpp"
#include "gw/localization.hpp"
#include "gw/mirror.hpp"
#include "gw/rational.hpp"
#include "gw/schubert.hpp"
#include "gw/series.hpp"

namespace gw::selftest {

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

CohClass random_class(std::mt19937_64& rng, int n) {
    CohClass c(n);
    for (int k = 0; k <= n; ++k) {
        c.set_coeff(k, random_rational(rng));
    }
    return c;
}

HLaurent random_hlaurent(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> exp(-4, 3);
    HLaurent h(n);
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        h.add_term(exp(rng), random_class(rng, n));
    }
    return h;
}

QSeries random_qseries(std::mt19937_64& rng, int n, int order) {
    QSeries s(n, order);
    for (int d = 0; d <= order; ++d) {
        s.set_coeff(d, random_hlaurent(rng, n));
    }
    return s;
}

ScalarSeries random_scalar(std::mt19937_64& rng, int order, bool zero_constant) {
    ScalarSeries s(order);
    for (int d = zero_constant ? 1 : 0; d <= order; ++d) {
        s.set_coeff(d, random_rational(rng));
    }
    return s;
}

}  // namespace

bool rational_exactness(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(-99, 99);
    std::uniform_int_distribution<long long> den(1, 99);
    for (int i = 0; i < cases; ++i) {
        const long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        // Independent reconstruction over machine integers.
        long long sn = a * d + c * b, sd = b * d;
        long long g = std::gcd(sn < 0 ? -sn : sn, sd);
        if (g != 0) {
            sn /= g;
            sd /= g;
        }
        const Rational sum = Rational(a, b) + Rational(c, d);
        if (sum != Rational(sn, sd)) {
            return false;
        }
        long long pn = a * c, pd = b * d;
        g = std::gcd(pn < 0 ? -pn : pn, pd);
        if (g != 0) {
            pn /= g;
            pd /= g;
        }
        if (Rational(a, b) * Rational(c, d) != Rational(pn, pd)) {
            return false;
        }
        if (Rational::from_string(sum.str()) != sum) {
            return false;
        }
    }
    return true;
}

bool cohomology_ring_axioms(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int i = 0; i < cases; ++i) {
        const int n = dim(rng);
        const CohClass a = random_class(rng, n);
        const CohClass b = random_class(rng, n);
        const CohClass c = random_class(rng, n);
        if (!(coh_mul(a, b) == coh_mul(b, a))) {
            return false;
        }
        if (!(coh_mul(coh_mul(a, b), c) == coh_mul(a, coh_mul(b, c)))) {
            return false;
        }
        if (!(coh_mul(a, b + c) == coh_mul(a, b) + coh_mul(a, c))) {
            return false;
        }
        if (coh_integrate(a + b) != coh_integrate(a) + coh_integrate(b)) {
            return false;
        }
        const HLaurent x = random_hlaurent(rng, n);
        const HLaurent y = random_hlaurent(rng, n);
        const HLaurent z = random_hlaurent(rng, n);
        if (!(hl_mul(x, y) == hl_mul(y, x))) {
            return false;
        }
        if (!(hl_mul(hl_mul(x, y), z) == hl_mul(x, hl_mul(y, z)))) {
            return false;
        }
        if (!(hl_mul(x, y + z) == hl_mul(x, y) + hl_mul(x, z))) {
            return false;
        }
    }
    return true;
}

bool hl_inverse_identity(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> cdist(-6, 6);
    std::uniform_int_distribution<int> mdist(1, 6);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int i = 0; i < cases; ++i) {
        const int n = dim(rng);
        const int c = cdist(rng);
        const int m = mdist(rng);
        const HLaurent factor = HLaurent::linear(c, m, n);
        if (!(hl_mul(factor, hl_linear_inverse(c, m, n)) == HLaurent::one(n))) {
            return false;
        }
    }
    return true;
}

bool series_ring_axioms(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 3);
    std::uniform_int_distribution<int> ord(0, 5);
    for (int i = 0; i < cases; ++i) {
        const int n = dim(rng);
        const int D = ord(rng);
        const QSeries a = random_qseries(rng, n, D);
        const QSeries b = random_qseries(rng, n, D);
        const QSeries c = random_qseries(rng, n, D);
        if (!(qs_mul(a, b) == qs_mul(b, a))) {
            return false;
        }
        if (!(qs_mul(qs_mul(a, b), c) == qs_mul(a, qs_mul(b, c)))) {
            return false;
        }
        if (!(qs_mul(a, qs_add(b, c)) == qs_add(qs_mul(a, b), qs_mul(a, c)))) {
            return false;
        }
        if (!(qs_mul(a, QSeries::one(n, D)) == a)) {
            return false;
        }
    }
    return true;
}

bool truncation_coherence(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 3);
    std::uniform_int_distribution<int> ord(1, 6);
    for (int i = 0; i < cases; ++i) {
        const int n = dim(rng);
        const int D = ord(rng);
        std::uniform_int_distribution<int> sub(0, D);
        const int Dp = sub(rng);
        const QSeries a = random_qseries(rng, n, D);
        const QSeries b = random_qseries(rng, n, D);
        if (!(qs_mul(a, b).truncated(Dp) == qs_mul(a.truncated(Dp), b.truncated(Dp)))) {
            return false;
        }
        ScalarSeries u = random_scalar(rng, D, true);
        u.set_coeff(1, Rational(1));
        const ScalarSeries s = random_scalar(rng, D, false);
        if (Dp >= 1) {
            if (!(scalar_compose(s, u).truncated(Dp) ==
                  scalar_compose(s.truncated(Dp), u.truncated(Dp)))) {
                return false;
            }
            if (!(scalar_revert(u).truncated(Dp) == scalar_revert(u.truncated(Dp)))) {
                return false;
            }
        }
    }
    return true;
}

bool revert_roundtrip(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ord(1, 8);
    std::uniform_int_distribution<int> lead(1, 4);
    for (int i = 0; i < cases; ++i) {
        const int D = ord(rng);
        ScalarSeries w = random_scalar(rng, D, true);
        w.set_coeff(1, Rational(lead(rng), lead(rng)));
        const ScalarSeries v = scalar_revert(w);
        const ScalarSeries id = ScalarSeries::identity(D);
        if (!(scalar_compose(w, v) == id) || !(scalar_compose(v, w) == id)) {
            return false;
        }
    }
    return true;
}

bool exp_products(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 3);
    std::uniform_int_distribution<int> ord(0, 6);
    for (int i = 0; i < cases; ++i) {
        const int n = dim(rng);
        const int D = ord(rng);
        const ScalarSeries a = random_scalar(rng, D, true);
        const ScalarSeries b = random_scalar(rng, D, true);
        const QSeries ea = exp_scalar_over_hbar(a, n);
        const QSeries eminus = exp_scalar_over_hbar(a.scaled(Rational(-1)), n);
        if (!(qs_mul(ea, eminus) == QSeries::one(n, D))) {
            return false;
        }
        if (!(qs_mul(ea, exp_scalar_over_hbar(b, n)) == exp_scalar_over_hbar(a + b, n))) {
            return false;
        }
    }
    return true;
}

bool schubert_duality(int max_m) {
    for (int m = 4; m <= max_m; ++m) {
        const int box = m - 2;
        for (int a = 0; a <= box; ++a) {
            for (int b = 0; b <= a; ++b) {
                for (int c = 0; c <= box; ++c) {
                    for (int d = 0; d <= c; ++d) {
                        const Rational got = grass_integrate(
                            schubert_mul(SchubertElt::sigma(m, a, b), SchubertElt::sigma(m, c, d)));
                        const bool dual = (c == box - b && d == box - a);
                        if (got != Rational(dual ? 1 : 0)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

bool weight_independence(std::uint64_t seed, int trials) {
    const struct {
        int n;
        std::vector<int> degrees;
        int d;
    } cases[] = {
        {3, {3}, 1},
        {4, {5}, 1},
        {4, {5}, 2},
        {2, {2}, 2},
        {5, {3, 3}, 2},
    };
    for (const auto& c : cases) {
        // twisted_integral already insists the trials agree.
        (void)twisted_integral(c.n, c.degrees, c.d, seed, trials);
    }
    return true;
}

bool oracle_agreement_degree_one(std::uint64_t seed) {
    const struct {
        int n;
        std::vector<int> degrees;
    } cases[] = {
        {3, {3}}, {4, {5}}, {5, {7}}, {5, {3, 3}}, {5, {4, 2}}, {6, {3, 2, 2}}, {7, {2, 2, 2, 2}},
    };
    for (const auto& c : cases) {
        SchubertElt cls = SchubertElt::one(c.n + 1);
        for (int l : c.degrees) {
            cls = schubert_mul(cls, chern_top_sym(l, c.n + 1));
        }
        const Rational schubert = grass_integrate(cls);
        const Rational localized = twisted_integral(c.n, c.degrees, 1, seed).value;
        if (schubert != localized) {
            return false;
        }
    }
    return true;
}

bool mirror_identity_line(int order) {
    const EmbeddingModel model = EmbeddingModel::line();
    if (!verify_mirror_identity(model, order).verified) {
        return false;
    }
    // Fano index 2: the normalization must be the identity.
    const GeometrySpec spec = model.geometry(order);
    const NormalizeResult norm = normalize(i_function(spec), spec);
    return norm.mirror_map.is_zero() && norm.shift_g0.is_zero() &&
           norm.unit_f == ScalarSeries::constant(order, Rational(1));
}

bool mirror_identity_conic(int order) {
    const EmbeddingModel model = EmbeddingModel::conic();
    if (!verify_mirror_identity(model, order).verified) {
        return false;
    }
    const GeometrySpec spec = model.geometry(order);
    const NormalizeResult norm = normalize(i_function(spec), spec);
    // Fano index 1: nonzero scalar shift, trivial mirror map.
    return !norm.shift_g0.is_zero() && norm.mirror_map.is_zero();
}

bool quintic_integrality(int order) {
    const InstantonTable table = extract_instanton(yukawa_quintic(order), order);
    if (table.first_non_integer().has_value()) {
        return false;
    }
    return table.n.at(1) == lines_on_hypersurface(5, 4).value;
}

bool dimension_bookkeeping(int order) {
    for (int n = 3; n <= 6; ++n) {
        if (expected_dim(n, 0, 0, 1) != 2 * (n - 1)) {
            return false;
        }
    }
    const GeometrySpec quintic{4, {5}, order};
    if (!je_degree_violations(normalize(i_function(quintic), quintic).je, quintic).empty()) {
        return false;
    }
    const GeometrySpec conic{2, {2}, order};
    if (!je_degree_violations(normalize(i_function(conic), conic).je, conic).empty()) {
        return false;
    }
    return true;
}

int run_all(std::uint64_t seed, std::ostream& os) {
    int failures = 0;
    const auto run = [&](const char* name, bool ok) {
        os << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) {
            ++failures;
        }
    };
    run("rational exactness vs machine integers", rational_exactness(seed, 200));
    run("cohomology ring axioms", cohomology_ring_axioms(seed + 1, 100));
    run("hl_linear_inverse multiplicative identity", hl_inverse_identity(seed + 2, 100));
    run("q-series ring axioms", series_ring_axioms(seed + 3, 100));
    run("truncation coherence", truncation_coherence(seed + 4, 100));
    run("revert/compose round-trip", revert_roundtrip(seed + 5, 100));
    run("exponential products", exp_products(seed + 6, 100));
    run("Schubert duality pairing", schubert_duality(7));
    run("localization weight independence", weight_independence(seed + 7, 3));
    run("degree-1 oracle agreement (Schubert vs localization)",
        oracle_agreement_degree_one(seed + 8));
    run("mirror identity, line model", mirror_identity_line(8));
    run("mirror identity, conic model", mirror_identity_conic(6));
    run("quintic instanton integrality", quintic_integrality(6));
    run("dimension bookkeeping", dimension_bookkeeping(6));
    return failures;
}

}  // namespace gw::selftest
