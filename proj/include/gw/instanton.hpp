#ifndef GW_INSTANTON_HPP
#define GW_INSTANTON_HPP

#include <map>
#include <optional>

#include "gw/rational.hpp"
#include "gw/series.hpp"

namespace gw {

/// Degree-indexed table of quintic invariants: n[d] is the expected integral
/// instanton number, K[d] the twisted degree-d invariant. They are tied by
/// the multiple-cover relation K_d = sum_{k | d} n_{d/k} / k^3.
struct InstantonTable {
    int max_degree = 0;
    std::map<int, Rational> n;
    std::map<int, Rational> K;

    /// First degree whose n_d fails to be an integer, if any.
    std::optional<int> first_non_integer() const;
};

/// Yukawa coupling of the quintic threefold in the flat coordinate Q = e^t:
///   K(Q) = 5 / ((1 - 3125 q) F(q)^2) * (q dQ / (Q dq))^{-3},
/// re-expanded in Q through the inverted mirror map. Constant term 5.
/// The discriminant constant 3125 = 5^5 is specific to the quintic; other
/// geometries are not accepted by this module.
ScalarSeries yukawa_quintic(int trunc_order);

/// Solves K(Q) = 5 + sum_d n_d d^3 Q^d / (1 - Q^d) for the n_d by triangular
/// elimination and fills K_d through the multiple-cover sum. Requires
/// constant term 5.
InstantonTable extract_instanton(const ScalarSeries& yukawa, int max_degree);

/// sum_{k | d} n_{d/k} / k^3; requires n_e for every divisor e of d.
Rational multiple_cover_sum(const InstantonTable& table, int d);

/// Rebuilds the Yukawa series from a table of n_d (round-trip check).
ScalarSeries yukawa_from_table(const InstantonTable& table, int trunc_order);

}  // namespace gw

#endif
