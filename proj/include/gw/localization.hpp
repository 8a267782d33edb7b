#ifndef GW_LOCALIZATION_HPP
#define GW_LOCALIZATION_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "gw/rational.hpp"

namespace gw {

/// Decorated graph indexing a torus-fixed locus of M_{0,0}(P^n, d), d <= 2.
/// Vertices carry fixed-point labels in {0..n}; each edge joins two vertices
/// with distinct labels and maps with the given degree onto the invariant
/// line through the corresponding fixed points.
struct FixedGraph {
    struct Edge {
        int v;
        int w;
        int degree;
    };
    std::vector<int> vertex_labels;
    std::vector<Edge> edges;
    int automorphism_order = 1;

    int total_degree() const;
    int valence(int vertex) const;
};

class SingularWeightError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Torus weights lambda_0..lambda_n. Localization denominators require the
/// entries to be pairwise distinct, nonzero, and (for degree-2 covers) with
/// no midpoint (lambda_i + lambda_j)/2 colliding with another weight.
struct WeightVector {
    std::vector<Rational> lambda;

    int ambient_dim() const { return static_cast<int>(lambda.size()) - 1; }
    bool nondegenerate(int max_curve_degree) const;
};

/// Samples small distinct integer weights in [-50, 50] \ {0}, retrying until
/// nondegenerate for curve degrees up to max_curve_degree.
WeightVector random_weights(int ambient_dim, int max_curve_degree, std::mt19937_64& rng);

/// All fixed-locus graphs for M_{0,0}(P^n, d); d must be 1 or 2.
std::vector<FixedGraph> enumerate_fixed_graphs(int n, int d);

/// The twisted integral  integral_{[M_{0,0}(P^n,d)]} c_top(E_d)  for
/// E = O(l_1) + ... + O(l_r), evaluated as an Atiyah-Bott fixed-point sum.
/// The result is independent of the weight vector; degenerate weights raise
/// SingularWeightError so the caller can resample.
Rational twisted_integral_localized(int n, const std::vector<int>& degrees, int d,
                                    const WeightVector& weights);

struct LocalizedValue {
    Rational value;
    int weight_trials = 0;
};

/// Convenience wrapper: evaluates the sum for `trials` independent random
/// weight vectors seeded from `seed`, checks pairwise agreement, and returns
/// the common value.
LocalizedValue twisted_integral(int n, const std::vector<int>& degrees, int d,
                                std::uint64_t seed, int trials = 3);

}  // namespace gw

#endif
