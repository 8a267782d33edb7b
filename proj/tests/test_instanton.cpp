#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "gw/instanton.hpp"
#include "gw/localization.hpp"
#include "gw/schubert.hpp"
#include "gw/selftest.hpp"

using namespace gw;

TEST_CASE("Yukawa coupling constant term and degree one") {
    const ScalarSeries k = yukawa_quintic(3);
    CHECK(k.coeff(0) == Rational(5));
    // [Q^1] K = 1^3 n_1 must be the line count of the Schubert oracle.
    CHECK(k.coeff(1) == lines_on_hypersurface(5, 4).value);
    CHECK(k.coeff(1) == Rational(2875));
}

TEST_CASE("extraction from synthetic couplings") {
    // K = 5: no instantons.
    const ScalarSeries flat = ScalarSeries::constant(4, Rational(5));
    const InstantonTable empty = extract_instanton(flat, 4);
    for (int d = 1; d <= 4; ++d) {
        CHECK(empty.n.at(d) == Rational(0));
        CHECK(empty.K.at(d) == Rational(0));
    }

    // A single primitive class: K = 5 + c Q/(1-Q) gives n_1 = c, n_{d>1} = 0.
    ScalarSeries single(4);
    single.set_coeff(0, Rational(5));
    for (int j = 1; j <= 4; ++j) {
        single.set_coeff(j, Rational(7));
    }
    const InstantonTable one_class = extract_instanton(single, 4);
    CHECK(one_class.n.at(1) == Rational(7));
    CHECK(one_class.n.at(2) == Rational(0));
    CHECK(one_class.n.at(3) == Rational(0));
    CHECK(one_class.K.at(2) == Rational(7, 8));

    CHECK_THROWS_AS(extract_instanton(ScalarSeries::constant(2, Rational(4)), 2),
                    std::invalid_argument);
}

TEST_CASE("multiple cover sums") {
    InstantonTable t;
    t.max_degree = 4;
    t.n[1] = Rational(10);
    t.n[2] = Rational(20);
    t.n[3] = Rational(30);
    t.n[4] = Rational(40);
    CHECK(multiple_cover_sum(t, 1) == Rational(10));
    CHECK(multiple_cover_sum(t, 2) == Rational(20) + Rational(10, 8));
    CHECK(multiple_cover_sum(t, 4) == Rational(40) + Rational(20, 8) + Rational(10, 64));
    t.n.erase(2);
    CHECK_THROWS_AS(multiple_cover_sum(t, 4), std::invalid_argument);
}

TEST_CASE("round-trip: table back to the coupling") {
    const int D = 6;
    const ScalarSeries k = yukawa_quintic(D);
    const InstantonTable table = extract_instanton(k, D);
    CHECK(yukawa_from_table(table, D) == k);
}

TEST_CASE("quintic instanton numbers") {
    const int D = 6;
    const InstantonTable table = extract_instanton(yukawa_quintic(D), D);

    CHECK_FALSE(table.first_non_integer().has_value());

    // n_1 against the Schubert oracle; K_2 against the localization oracle.
    CHECK(table.n.at(1) == lines_on_hypersurface(5, 4).value);
    CHECK(table.K.at(2) == twisted_integral(4, {5}, 2, 77).value);
    CHECK(table.K.at(2) == table.n.at(2) + table.n.at(1) / Rational(8));

    // The classical table, regression-pinned after the oracle checks above.
    CHECK(table.n.at(1) == Rational(2875));
    CHECK(table.n.at(2) == Rational(609250));
    CHECK(table.n.at(3) == Rational(317206375));
    CHECK(table.n.at(4) == Rational::from_string("242467530000"));
    CHECK(table.n.at(5) == Rational::from_string("229305888887625"));
    CHECK(table.n.at(6) == Rational::from_string("248249742118022000"));

    CHECK(selftest::quintic_integrality(6));
}
