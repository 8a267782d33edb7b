#include "gw/instanton.hpp"

#include <stdexcept>

#include "gw/mirror.hpp"

namespace gw {

std::optional<int> InstantonTable::first_non_integer() const {
    for (const auto& [d, nd] : n) {
        if (!nd.is_integer()) {
            return d;
        }
    }
    return std::nullopt;
}

ScalarSeries yukawa_quintic(int trunc_order) {
    if (trunc_order < 1) {
        throw std::invalid_argument("yukawa_quintic: truncation order must be >= 1");
    }
    const GeometrySpec quintic{4, {5}, trunc_order};
    const NormalizeResult norm = normalize(i_function(quintic), quintic);
    const ScalarSeries& f = norm.mirror_map;
    const ScalarSeries& unit = norm.unit_f;

    // 1 - 5^5 q.
    ScalarSeries discriminant = ScalarSeries::constant(trunc_order, Rational(1));
    discriminant.set_coeff(1, Rational(-3125));

    // q dQ/(Q dq) = 1 + q f'(q) for Q = q e^{f}.
    const ScalarSeries jacobian = f.one_plus_q_dlog();

    ScalarSeries k_of_q = ScalarSeries::constant(trunc_order, Rational(5));
    k_of_q = k_of_q * discriminant.reciprocal();
    const ScalarSeries unit_inv = unit.reciprocal();
    k_of_q = k_of_q * unit_inv * unit_inv;
    const ScalarSeries jac_inv = jacobian.reciprocal();
    k_of_q = k_of_q * jac_inv * jac_inv * jac_inv;

    // Re-expand in the flat coordinate via the inverted mirror map.
    ScalarSeries big_q(trunc_order);
    const ScalarSeries ef = scalar_exp(f);
    for (int d = 1; d <= trunc_order; ++d) {
        big_q.set_coeff(d, ef.coeff(d - 1));
    }
    const ScalarSeries k = scalar_compose(k_of_q, scalar_revert(big_q));
    if (k.coeff(0) != Rational(5)) {
        throw std::logic_error("yukawa_quintic: constant term is not 5");
    }
    return k;
}

InstantonTable extract_instanton(const ScalarSeries& yukawa, int max_degree) {
    if (yukawa.coeff(0) != Rational(5)) {
        throw std::invalid_argument("extract_instanton: Yukawa constant term must be 5");
    }
    if (max_degree > yukawa.order()) {
        throw std::invalid_argument("extract_instanton: series too short for requested degree");
    }
    InstantonTable table;
    table.max_degree = max_degree;
    // [Q^N] K = sum_{d | N} d^3 n_d, so the n_d unwind triangularly.
    for (int N = 1; N <= max_degree; ++N) {
        Rational acc = yukawa.coeff(N);
        for (int d = 1; d < N; ++d) {
            if (N % d == 0) {
                acc -= Rational(d).pow(3) * table.n.at(d);
            }
        }
        table.n[N] = acc / Rational(N).pow(3);
    }
    for (int N = 1; N <= max_degree; ++N) {
        table.K[N] = multiple_cover_sum(table, N);
    }
    return table;
}

Rational multiple_cover_sum(const InstantonTable& table, int d) {
    if (d < 1) {
        throw std::invalid_argument("multiple_cover_sum: degree must be >= 1");
    }
    Rational acc(0);
    for (int k = 1; k <= d; ++k) {
        if (d % k == 0) {
            auto it = table.n.find(d / k);
            if (it == table.n.end()) {
                throw std::invalid_argument("multiple_cover_sum: missing n_" +
                                            std::to_string(d / k));
            }
            acc += it->second / Rational(k).pow(3);
        }
    }
    return acc;
}

ScalarSeries yukawa_from_table(const InstantonTable& table, int trunc_order) {
    ScalarSeries k = ScalarSeries::constant(trunc_order, Rational(5));
    for (const auto& [d, nd] : table.n) {
        // n_d d^3 Q^d / (1 - Q^d) = n_d d^3 (Q^d + Q^{2d} + ...).
        for (int j = d; j <= trunc_order; j += d) {
            k.set_coeff(j, k.coeff(j) + nd * Rational(d).pow(3));
        }
    }
    return k;
}

}  // namespace gw
