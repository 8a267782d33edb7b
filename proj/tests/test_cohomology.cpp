#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "gw/cohomology.hpp"
#include "gw/selftest.hpp"

using namespace gw;

namespace {

CohClass parse_class(int n, std::vector<long> coeffs) {
    CohClass c(n);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        c.set_coeff(static_cast<int>(k), Rational(coeffs[k]));
    }
    return c;
}

}  // namespace

TEST_CASE("cup product truncates at H^{n+1}") {
    // (1 + H)^2 in P^1.
    const CohClass one_plus_h = parse_class(1, {1, 1});
    CHECK(coh_mul(one_plus_h, one_plus_h) == parse_class(1, {1, 2}));

    // H * H^n = 0.
    for (int n = 1; n <= 5; ++n) {
        const CohClass h = CohClass::h_power(n, 1);
        const CohClass hn = CohClass::h_power(n, n);
        CHECK(coh_mul(h, hn).is_zero());
    }

    // (1 + H)^3 in P^2.
    const CohClass u = parse_class(2, {1, 1});
    CHECK(coh_mul(coh_mul(u, u), u) == parse_class(2, {1, 3, 3}));
}

TEST_CASE("integration reads the top coefficient") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(coh_integrate(CohClass::h_power(n, n)) == Rational(1));
        CHECK(coh_integrate(CohClass::scalar(n, Rational(1))) == Rational(0));
    }
    CHECK(coh_integrate(parse_class(2, {3, 0, 7})) == Rational(7));
}

TEST_CASE("top Chern class of a split bundle") {
    const auto quintic = ctop_split({5}, 4);
    CHECK_FALSE(quintic.degree_overflow);
    CHECK(quintic.value == CohClass::h_power(4, 1, Rational(5)));

    CHECK(ctop_split({2}, 2).value == CohClass::h_power(2, 1, Rational(2)));
    CHECK(ctop_split({2, 3}, 4).value == CohClass::h_power(4, 2, Rational(6)));

    const auto overflow = ctop_split({1, 1, 1}, 2);
    CHECK(overflow.degree_overflow);
    CHECK(overflow.value.is_zero());

    CHECK_THROWS_AS(ctop_split({0}, 3), std::invalid_argument);
}

TEST_CASE("hl_mul examples") {
    const HLaurent hbar = HLaurent::linear(0, 1, 1);
    const HLaurent hbar_inv = hl_linear_inverse(0, 1, 1);
    CHECK(hl_mul(hbar, hbar_inv) == HLaurent::one(1));

    // (H + hbar) * (hbar^{-1} - H hbar^{-2}) = 1 in P^1.
    const HLaurent lin = HLaurent::linear(1, 1, 1);
    HLaurent inv(1);
    inv.add_term(-1, CohClass::scalar(1, Rational(1)));
    inv.add_term(-2, CohClass::h_power(1, 1, Rational(-1)));
    CHECK(hl_mul(lin, inv) == HLaurent::one(1));

    CHECK(hl_mul(HLaurent::zero(3), HLaurent::linear(2, 5, 3)).is_zero());
}

TEST_CASE("hl_linear_inverse frozen expansions") {
    // (H + hbar)^{-1} in P^1.
    HLaurent expect(1);
    expect.add_term(-1, CohClass::scalar(1, Rational(1)));
    expect.add_term(-2, CohClass::h_power(1, 1, Rational(-1)));
    CHECK(hl_linear_inverse(1, 1, 1) == expect);

    // (2 hbar)^{-1} in P^3.
    CHECK(hl_linear_inverse(0, 2, 3) ==
          HLaurent::term(CohClass::scalar(3, Rational(1, 2)), -1));

    // (5H + 3 hbar)^{-1} in P^2.
    HLaurent expect2(2);
    expect2.add_term(-1, CohClass::scalar(2, Rational(1, 3)));
    expect2.add_term(-2, CohClass::h_power(2, 1, Rational(-5, 9)));
    expect2.add_term(-3, CohClass::h_power(2, 2, Rational(25, 27)));
    const HLaurent got = hl_linear_inverse(5, 3, 2);
    CHECK(got == expect2);
    CHECK(hl_mul(HLaurent::linear(5, 3, 2), got) == HLaurent::one(2));

    CHECK_THROWS_AS(hl_linear_inverse(1, 0, 2), std::domain_error);
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(coh_mul(CohClass(1), CohClass(2)), std::invalid_argument);
    CHECK_THROWS_AS(hl_mul(HLaurent::one(1), HLaurent::one(2)), std::invalid_argument);
}

TEST_CASE("property: ring axioms and inverse identity") {
    CHECK(selftest::cohomology_ring_axioms(7, 150));
    CHECK(selftest::hl_inverse_identity(11, 150));
}
