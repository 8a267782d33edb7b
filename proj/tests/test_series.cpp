#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "gw/selftest.hpp"
#include "gw/series.hpp"

using namespace gw;

namespace {

ScalarSeries make_series(int order, std::vector<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) {
        c.emplace_back(x);
    }
    return ScalarSeries(order, std::move(c));
}

/// Independent reversion oracle: Lagrange inversion,
///   [Q^k] v = (1/k) [q^{k-1}] (q / w(q))^k.
ScalarSeries lagrange_revert(const ScalarSeries& w) {
    const int D = w.order();
    ScalarSeries w_over_q(D - 1);
    for (int d = 0; d < D; ++d) {
        w_over_q.set_coeff(d, w.coeff(d + 1));
    }
    const ScalarSeries base = w_over_q.reciprocal();
    ScalarSeries pw = ScalarSeries::constant(D - 1, Rational(1));
    ScalarSeries v(D);
    for (int k = 1; k <= D; ++k) {
        pw = pw * base;
        v.set_coeff(k, pw.coeff(k - 1) / Rational(k));
    }
    return v;
}

}  // namespace

TEST_CASE("q-series products") {
    // (1 + qH)(1 - qH) = 1 - q^2 H^2 in P^2 at order 2.
    QSeries a = QSeries::one(2, 2);
    a.set_coeff(1, HLaurent::term(CohClass::h_power(2, 1), 0));
    QSeries b = QSeries::one(2, 2);
    b.set_coeff(1, HLaurent::term(CohClass::h_power(2, 1, Rational(-1)), 0));
    QSeries expect = QSeries::one(2, 2);
    expect.set_coeff(2, HLaurent::term(CohClass::h_power(2, 2, Rational(-1)), 0));
    CHECK(qs_mul(a, b) == expect);

    CHECK(qs_mul(a, QSeries::one(2, 2)) == a);

    // Geometric series times (1 - q) telescopes to 1.
    QSeries geo(1, 5);
    QSeries one_minus_q = QSeries::one(1, 5);
    one_minus_q.set_coeff(1, HLaurent::term(CohClass::scalar(1, Rational(-1)), 0));
    for (int d = 0; d <= 5; ++d) {
        geo.set_coeff(d, HLaurent::one(1));
    }
    CHECK(qs_mul(geo, one_minus_q) == QSeries::one(1, 5));

    CHECK_THROWS_AS(qs_mul(QSeries::one(1, 2), QSeries::one(2, 2)), std::invalid_argument);
}

TEST_CASE("scalar composition") {
    const ScalarSeries q = ScalarSeries::identity(4);
    const ScalarSeries u = make_series(4, {0, 1, 1});  // q + q^2
    CHECK(scalar_compose(q, u) == u);
    const ScalarSeries q2 = make_series(4, {0, 0, 1});
    CHECK(scalar_compose(q2, u) == make_series(4, {0, 0, 1, 2, 1}));
    const ScalarSeries a = make_series(4, {3, 1, 0, 2, 5});
    CHECK(scalar_compose(a, q) == a);

    CHECK_THROWS_AS(scalar_compose(a, make_series(4, {1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(scalar_compose(a, make_series(4, {0, 0, 1})), std::invalid_argument);
}

TEST_CASE("reversion against the Lagrange-inversion oracle") {
    const ScalarSeries w = make_series(5, {0, 1, 1});  // q + q^2
    const ScalarSeries oracle = lagrange_revert(w);
    // Signed Catalan numbers.
    CHECK(oracle == make_series(5, {0, 1, -1, 2, -5, 14}));
    CHECK(scalar_revert(w) == oracle);

    CHECK(scalar_revert(ScalarSeries::identity(6)) == ScalarSeries::identity(6));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<long> lead(1, 4);
    std::uniform_int_distribution<int> ord(1, 9);
    for (int i = 0; i < 60; ++i) {
        const int D = ord(rng);
        ScalarSeries v(D);
        v.set_coeff(1, Rational(lead(rng), lead(rng)));
        for (int d = 2; d <= D; ++d) {
            v.set_coeff(d, Rational(coeff(rng), lead(rng)));
        }
        CHECK(scalar_revert(v) == lagrange_revert(v));
    }

    CHECK_THROWS_AS(scalar_revert(make_series(3, {0, 0, 1})), std::domain_error);
    CHECK_THROWS_AS(scalar_revert(make_series(3, {1, 1})), std::domain_error);
}

TEST_CASE("exponentials over hbar") {
    // a = q at order 2: 1 + q/hbar + q^2/(2 hbar^2).
    QSeries e = exp_scalar_over_hbar(ScalarSeries::identity(2), 1);
    QSeries expect = QSeries::one(1, 2);
    expect.set_coeff(1, HLaurent::term(CohClass::scalar(1, Rational(1)), -1));
    expect.set_coeff(2, HLaurent::term(CohClass::scalar(1, Rational(1, 2)), -2));
    CHECK(e == expect);

    CHECK(exp_scalar_over_hbar(ScalarSeries(3), 2) == QSeries::one(2, 3));
    CHECK_THROWS_AS(exp_scalar_over_hbar(make_series(2, {1}), 1), std::domain_error);

    // Nilpotency cuts the H-carrying exponential off at H^n.
    const ScalarSeries f = make_series(3, {0, 2, -1, 3});
    const QSeries eh = exp_class_over_hbar(f, CohClass::h_power(2, 1));
    const QSeries eminus = exp_class_over_hbar(f.scaled(Rational(-1)), CohClass::h_power(2, 1));
    CHECK(qs_mul(eh, eminus) == QSeries::one(2, 3));
}

TEST_CASE("dump format is sorted and exact") {
    QSeries s(1, 1);
    s.set_coeff(0, HLaurent::one(1));
    HLaurent h(1);
    h.add_term(-2, CohClass::scalar(1, Rational(1)));
    h.add_term(-3, CohClass::h_power(1, 1, Rational(-1, 2)));
    s.set_coeff(1, h);
    CHECK(s.dump() == "0 0 0 1\n1 -3 1 -1/2\n1 -2 0 1\n");
}

TEST_CASE("property: series engine") {
    CHECK(selftest::series_ring_axioms(3, 120));
    CHECK(selftest::truncation_coherence(4, 120));
    CHECK(selftest::revert_roundtrip(5, 120));
    CHECK(selftest::exp_products(6, 120));
}
