#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gw/mirror.hpp"
#include "gw/selftest.hpp"

using namespace gw;

namespace {

HLaurent laurent(int n, std::vector<std::tuple<int, int, Rational>> entries) {
    HLaurent h(n);
    for (const auto& [hbar, hpow, val] : entries) {
        h.add_term(hbar, CohClass::h_power(n, hpow, val));
    }
    return h;
}

/// Harmonic number H_d.
Rational harmonic(int d) {
    Rational acc(0);
    for (int m = 1; m <= d; ++m) {
        acc += Rational(1, m);
    }
    return acc;
}

}  // namespace

TEST_CASE("reduced J of P^1: frozen low-order coefficients") {
    const JSeries j = j_projective(1, 3);
    CHECK(j.form_tag == JForm::reduced_j);
    CHECK(j.payload.coeff(0) == HLaurent::one(1));
    CHECK(j.payload.coeff(1) == laurent(1, {{-2, 0, Rational(1)}, {-3, 1, Rational(-2)}}));
    CHECK(j.payload.coeff(2) == laurent(1, {{-4, 0, Rational(1, 4)}, {-5, 1, Rational(-3, 4)}}));
    CHECK(j.payload.coeff(3) ==
          laurent(1, {{-6, 0, Rational(1, 36)}, {-7, 1, Rational(-11, 108)}}));
}

TEST_CASE("reduced J of P^n inverts the hypergeometric denominator") {
    for (int n = 1; n <= 3; ++n) {
        const JSeries j = j_projective(n, 4);
        for (int d = 1; d <= 4; ++d) {
            HLaurent prod = j.payload.coeff(d);
            for (int m = 1; m <= d; ++m) {
                for (int k = 0; k <= n; ++k) {
                    prod = hl_mul(prod, HLaurent::linear(1, m, n));
                }
            }
            CHECK(prod == HLaurent::one(n));
        }
    }
}

TEST_CASE("golden dump of the reduced J of P^1") {
    std::ifstream in(std::string(GW_TEST_DIR) + "/golden/j_p1_order3.txt");
    REQUIRE(in.good());
    std::stringstream expected;
    expected << in.rdbuf();
    CHECK(j_projective(1, 3).payload.dump() == expected.str());
}

TEST_CASE("I-series basics") {
    const GeometrySpec quintic{4, {5}, 3};
    const JSeries i = i_function(quintic);
    CHECK(i.form_tag == JForm::capped_i);
    CHECK(i.payload.coeff(0) == HLaurent::term(quintic.top_chern(), 0));

    // Scalar part of the uncapped ratio: prod_i (l_i d)! / (d!)^{n+1}.
    const QSeries uncapped = i_function_uncapped(quintic);
    for (int d = 0; d <= 3; ++d) {
        const Rational expect =
            factorial(5 * d) / factorial(d).pow(5);
        CHECK(uncapped.slot(0, 0).coeff(d) == expect);
    }
    CHECK(uncapped.slot(0, 0).coeff(1) == Rational(120));

    // (n=2, l=[2]), d=1 uncapped: 2 hbar^{-1} - 2 H^2 hbar^{-3}.
    const GeometrySpec conic{2, {2}, 2};
    const QSeries cu = i_function_uncapped(conic);
    CHECK(cu.coeff(1) == laurent(2, {{-1, 0, Rational(2)}, {-3, 2, Rational(-2)}}));
    // d=2: 3 hbar^{-2} - H hbar^{-3} - 11/4 H^2 hbar^{-4}.
    CHECK(cu.coeff(2) == laurent(2, {{-2, 0, Rational(3)},
                                     {-3, 1, Rational(-1)},
                                     {-4, 2, Rational(-11, 4)}}));
}

TEST_CASE("normalization is the identity for Fano index >= 2") {
    const GeometrySpec spec{2, {1}, 6};
    const NormalizeResult norm = normalize(i_function(spec), spec);
    CHECK(norm.je.payload == i_function(spec).payload);
    CHECK(norm.mirror_map.is_zero());
    CHECK(norm.shift_g0.is_zero());
    CHECK(norm.unit_f == ScalarSeries::constant(6, Rational(1)));
}

TEST_CASE("conic normalization has the scalar shift g_0 = 2q") {
    const GeometrySpec spec{2, {2}, 6};
    const NormalizeResult norm = normalize(i_function(spec), spec);
    ScalarSeries expect_g0(6);
    expect_g0.set_coeff(1, Rational(2));
    CHECK(norm.shift_g0 == expect_g0);
    CHECK(norm.mirror_map.is_zero());
    CHECK(norm.unit_f == ScalarSeries::constant(6, Rational(1)));

    // J_E coefficients: q^1 vanishes, q^2 = 2H hbar^{-2} - 2H^2 hbar^{-3}.
    CHECK(norm.je.payload.coeff(0) == HLaurent::term(spec.top_chern(), 0));
    CHECK(norm.je.payload.coeff(1).is_zero());
    CHECK(norm.je.payload.coeff(2) ==
          laurent(2, {{-2, 1, Rational(2)}, {-3, 2, Rational(-2)}}));
}

TEST_CASE("quintic normalization: unit and mirror map from the explicit formulas") {
    const int D = 6;
    const GeometrySpec quintic{4, {5}, D};
    const NormalizeResult norm = normalize(i_function(quintic), quintic);

    CHECK(norm.shift_g0.is_zero());

    ScalarSeries expect_f(D);   // F(q) = sum (5d)!/(d!)^5 q^d
    ScalarSeries expect_g1(D);  // g_1(q) = sum (5d)!/(d!)^5 * 5(H_{5d} - H_d) q^d
    for (int d = 0; d <= D; ++d) {
        const Rational base = factorial(5 * d) / factorial(d).pow(5);
        expect_f.set_coeff(d, base);
        expect_g1.set_coeff(d, base * Rational(5) * (harmonic(5 * d) - harmonic(d)));
    }
    CHECK(norm.unit_f == expect_f);
    CHECK(norm.mirror_map == expect_g1 * expect_f.reciprocal());
    CHECK(norm.mirror_map.coeff(1) == Rational(770));

    // J-form contract on the output.
    for (int d = 0; d <= D; ++d) {
        CHECK(norm.je.payload.coeff(d).coeff(-1).is_zero());
    }
    CHECK(norm.je.payload.max_hbar_exp() <= 0);
}

TEST_CASE("normalize is idempotent and validates its input") {
    const GeometrySpec spec{2, {2}, 4};
    const NormalizeResult first = normalize(i_function(spec), spec);
    const NormalizeResult second = normalize(first.je, spec);
    CHECK(second.je.payload == first.je.payload);
    CHECK(second.mirror_map.is_zero());
    CHECK(second.shift_g0.is_zero());

    CHECK_THROWS_AS(normalize(j_projective(2, 4), spec), std::invalid_argument);
}

TEST_CASE("pushforward of classes and Novikov variables") {
    // i_*(1) = eH, i_*(q * 1) = q^e * eH, i_*(omega) = H^2.
    JSeries jy = j_projective(1, 2);
    QSeries simple(1, 1);
    simple.set_coeff(0, HLaurent::one(1));
    simple.set_coeff(1, HLaurent::one(1));
    const JSeries simple_j{simple, JForm::reduced_j};

    const QSeries pushed2 = pushforward(EmbeddingModel::conic(), simple_j, 4);
    CHECK(pushed2.coeff(0) == HLaurent::term(CohClass::h_power(2, 1, Rational(2)), 0));
    CHECK(pushed2.coeff(1).is_zero());
    CHECK(pushed2.coeff(2) == HLaurent::term(CohClass::h_power(2, 1, Rational(2)), 0));

    QSeries omega(1, 0);
    omega.set_coeff(0, HLaurent::term(CohClass::h_power(1, 1), 0));
    const QSeries pushed1 =
        pushforward(EmbeddingModel::line(), JSeries{omega, JForm::reduced_j}, 0);
    CHECK(pushed1.coeff(0) == HLaurent::term(CohClass::h_power(2, 2), 0));

    CHECK_THROWS_AS(pushforward(EmbeddingModel::line(), JSeries{simple, JForm::capped_i}, 2),
                    std::invalid_argument);
}

TEST_CASE("mirror identity verifies for both embedding models") {
    const VerificationReport line = verify_mirror_identity(EmbeddingModel::line(), 8);
    CHECK(line.verified);
    CHECK(line.mismatches.empty());

    const VerificationReport conic = verify_mirror_identity(EmbeddingModel::conic(), 6);
    CHECK(conic.verified);
    CHECK(conic.mismatches.empty());

    const VerificationReport trivial = verify_mirror_identity(EmbeddingModel::conic(), 0);
    CHECK(trivial.verified);

    CHECK(selftest::mirror_identity_line(8));
    CHECK(selftest::mirror_identity_conic(6));
}

TEST_CASE("verification report serializes to the documented schema") {
    const VerificationReport report = verify_mirror_identity(EmbeddingModel::line(), 3);
    const nlohmann::json j = nlohmann::json::parse(report.to_json());
    CHECK(j["model"] == "line");
    CHECK(j["order"] == 3);
    CHECK(j["status"] == "verified");
    CHECK(j["mismatches"].is_array());
    CHECK(j["mismatches"].empty());
}

TEST_CASE("expected dimension and section-bundle ranks") {
    // dim G(2, n+1) = 2(n-1) agrees with the moduli dimension at d = 1.
    for (int n = 3; n <= 6; ++n) {
        CHECK(expected_dim(n, 0, 0, 1) == 2 * (n - 1));
    }
    CHECK(expected_dim(4, 0, 0, 1) == 6);
    CHECK_THROWS_AS(expected_dim(4, 1, 0, 1), std::domain_error);

    const GeometrySpec quintic{4, {5}, 2};
    CHECK(ed_rank(quintic, 1, false) == 6);
    CHECK(ed_rank(quintic, 2, true) == 10);
    const GeometrySpec ci{5, {3, 3}, 2};
    CHECK(ed_rank(ci, 2, false) == 14);
}

TEST_CASE("dimension bookkeeping holds on normalized series") {
    const GeometrySpec quintic{4, {5}, 5};
    const NormalizeResult norm = normalize(i_function(quintic), quintic);
    CHECK(je_degree_violations(norm.je, quintic).empty());

    const GeometrySpec conic{2, {2}, 6};
    CHECK(je_degree_violations(normalize(i_function(conic), conic).je, conic).empty());

    // A rogue term is flagged.
    JSeries broken = norm.je;
    QSeries payload = broken.payload;
    HLaurent h = payload.coeff(1);
    h.add_term(-2, CohClass::h_power(4, 2));
    payload.set_coeff(1, h);
    broken.payload = payload;
    CHECK_FALSE(je_degree_violations(broken, quintic).empty());

    CHECK(selftest::dimension_bookkeeping(5));
}
