#include "gw/localization.hpp"

#include <algorithm>
#include <set>

namespace gw {

int FixedGraph::total_degree() const {
    int d = 0;
    for (const auto& e : edges) {
        d += e.degree;
    }
    return d;
}

int FixedGraph::valence(int vertex) const {
    int v = 0;
    for (const auto& e : edges) {
        v += (e.v == vertex) + (e.w == vertex);
    }
    return v;
}

bool WeightVector::nondegenerate(int max_curve_degree) const {
    const int n = ambient_dim();
    if (n < 1) {
        return false;
    }
    for (int i = 0; i <= n; ++i) {
        if (lambda[static_cast<std::size_t>(i)].is_zero()) {
            return false;
        }
        for (int j = i + 1; j <= n; ++j) {
            if (lambda[static_cast<std::size_t>(i)] == lambda[static_cast<std::size_t>(j)]) {
                return false;
            }
        }
    }
    if (max_curve_degree >= 2) {
        // Degree-2 covers put (lambda_i + lambda_j)/2 - lambda_k in a
        // normal-bundle denominator.
        for (int i = 0; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const Rational mid =
                    (lambda[static_cast<std::size_t>(i)] + lambda[static_cast<std::size_t>(j)]) *
                    Rational(1, 2);
                for (int k = 0; k <= n; ++k) {
                    if (k != i && k != j && mid == lambda[static_cast<std::size_t>(k)]) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

WeightVector random_weights(int ambient_dim, int max_curve_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-50, 50);
    WeightVector w;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        w.lambda.clear();
        std::set<int> used;
        used.insert(0);
        while (static_cast<int>(w.lambda.size()) <= ambient_dim) {
            const int x = dist(rng);
            if (used.insert(x).second) {
                w.lambda.emplace_back(x);
            }
        }
        if (w.nondegenerate(max_curve_degree)) {
            return w;
        }
    }
    throw SingularWeightError("random_weights: failed to sample a nondegenerate weight vector");
}

std::vector<FixedGraph> enumerate_fixed_graphs(int n, int d) {
    if (d != 1 && d != 2) {
        throw std::invalid_argument("enumerate_fixed_graphs: only curve degrees 1 and 2 are supported");
    }
    std::vector<FixedGraph> graphs;
    if (d == 1) {
        for (int i = 0; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                graphs.push_back({{i, j}, {{0, 1, 1}}, 1});
            }
        }
        return graphs;
    }
    // Degree-2 covers of a single invariant line; the deck transformation
    // contributes the automorphism factor.
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            graphs.push_back({{i, j}, {{0, 1, 2}}, 2});
        }
    }
    // Two degree-1 edges glued over the middle fixed point. Equal end labels
    // (a nodal double cover of one line) are legitimate fixed loci; swapping
    // the two components is then an automorphism.
    for (int mid = 0; mid <= n; ++mid) {
        for (int x = 0; x <= n; ++x) {
            if (x == mid) {
                continue;
            }
            for (int y = x; y <= n; ++y) {
                if (y == mid) {
                    continue;
                }
                graphs.push_back({{x, mid, y}, {{0, 1, 1}, {1, 2, 1}}, x == y ? 2 : 1});
            }
        }
    }
    return graphs;
}

namespace {

const Rational& lam(const WeightVector& w, int i) {
    return w.lambda[static_cast<std::size_t>(i)];
}

/// Product of the moving weights of H^0(C_e, f^* T P^n) for one edge, i.e.
/// all (a lambda_i + b lambda_j)/d_e - lambda_k with a+b = d_e except the two
/// structural zeros at ((d_e,0), k=i) and ((0,d_e), k=j).
Rational edge_tangent_product(const WeightVector& w, int i, int j, int de) {
    const int n = w.ambient_dim();
    Rational prod(1);
    for (int a = 0; a <= de; ++a) {
        const int b = de - a;
        const Rational point =
            (lam(w, i) * Rational(a) + lam(w, j) * Rational(b)) * Rational(1, de);
        for (int k = 0; k <= n; ++k) {
            if ((a == de && k == i) || (a == 0 && k == j)) {
                continue;
            }
            const Rational factor = point - lam(w, k);
            if (factor.is_zero()) {
                throw SingularWeightError("degenerate weights: vanishing tangent weight");
            }
            prod *= factor;
        }
    }
    return prod;
}

/// Euler class of the section bundle H^0(C, f^* O(l)) at the fixed locus:
/// per edge the weights (a lambda_i + b lambda_j)/d_e with a+b = l d_e, and
/// one gluing condition l lambda_v per extra branch at each vertex.
Rational section_euler(const FixedGraph& g, const WeightVector& w, int l) {
    Rational prod(1);
    for (const auto& e : g.edges) {
        const int i = g.vertex_labels[static_cast<std::size_t>(e.v)];
        const int j = g.vertex_labels[static_cast<std::size_t>(e.w)];
        for (int a = 0; a <= l * e.degree; ++a) {
            const int b = l * e.degree - a;
            prod *= (lam(w, i) * Rational(a) + lam(w, j) * Rational(b)) * Rational(1, e.degree);
        }
    }
    for (int v = 0; v < static_cast<int>(g.vertex_labels.size()); ++v) {
        const int val = g.valence(v);
        const Rational fiber = Rational(l) * lam(w, g.vertex_labels[static_cast<std::size_t>(v)]);
        for (int extra = 0; extra < val - 1; ++extra) {
            if (fiber.is_zero()) {
                throw SingularWeightError("degenerate weights: zero section weight at a node");
            }
            prod /= fiber;
        }
    }
    return prod;
}

/// Euler class of the virtual normal bundle of the fixed locus.
Rational normal_euler(const FixedGraph& g, const WeightVector& w) {
    const int n = w.ambient_dim();
    Rational prod(1);
    for (const auto& e : g.edges) {
        prod *= edge_tangent_product(w, g.vertex_labels[static_cast<std::size_t>(e.v)],
                                     g.vertex_labels[static_cast<std::size_t>(e.w)], e.degree);
    }
    // Domain tangent weight along edge e at its end v.
    auto flag_weight = [&](const FixedGraph::Edge& e, int v) {
        const int x = g.vertex_labels[static_cast<std::size_t>(v)];
        const int y = g.vertex_labels[static_cast<std::size_t>(e.v == v ? e.w : e.v)];
        return (lam(w, x) - lam(w, y)) * Rational(1, e.degree);
    };
    for (int v = 0; v < static_cast<int>(g.vertex_labels.size()); ++v) {
        std::vector<Rational> tangents;
        for (const auto& e : g.edges) {
            if (e.v == v || e.w == v) {
                tangents.push_back(flag_weight(e, v));
            }
        }
        if (tangents.size() == 1) {
            // Leaf: reparametrizations moving the free fixed point.
            prod /= tangents[0];
        } else if (tangents.size() == 2) {
            // Node over this fixed point: smoothing minus the target fiber.
            prod *= tangents[0] + tangents[1];
            const int x = g.vertex_labels[static_cast<std::size_t>(v)];
            for (int k = 0; k <= n; ++k) {
                if (k != x) {
                    prod /= lam(w, x) - lam(w, k);
                }
            }
        } else {
            throw std::logic_error("normal_euler: valence > 2 not supported at curve degree <= 2");
        }
    }
    return prod;
}

}  // namespace

Rational twisted_integral_localized(int n, const std::vector<int>& degrees, int d,
                                    const WeightVector& weights) {
    if (weights.ambient_dim() != n) {
        throw std::invalid_argument("twisted_integral_localized: weight vector size mismatch");
    }
    if (!weights.nondegenerate(d)) {
        throw SingularWeightError("twisted_integral_localized: degenerate weight vector");
    }
    for (int l : degrees) {
        if (l < 1) {
            throw std::invalid_argument("twisted_integral_localized: bundle degrees must be positive");
        }
    }
    Rational total(0);
    for (const auto& g : enumerate_fixed_graphs(n, d)) {
        Rational contrib(1);
        for (int l : degrees) {
            contrib *= section_euler(g, weights, l);
        }
        if (contrib.is_zero()) {
            continue;
        }
        contrib /= normal_euler(g, weights);
        contrib *= Rational(1, g.automorphism_order);
        total += contrib;
    }
    return total;
}

LocalizedValue twisted_integral(int n, const std::vector<int>& degrees, int d, std::uint64_t seed,
                                int trials) {
    if (trials < 1) {
        throw std::invalid_argument("twisted_integral: need at least one weight trial");
    }
    std::mt19937_64 rng(seed);
    LocalizedValue out;
    bool have_value = false;
    while (out.weight_trials < trials) {
        try {
            const WeightVector w = random_weights(n, d, rng);
            const Rational v = twisted_integral_localized(n, degrees, d, w);
            if (have_value && v != out.value) {
                throw std::logic_error(
                    "twisted_integral: weight dependence detected, contribution formula is wrong");
            }
            out.value = v;
            have_value = true;
            ++out.weight_trials;
        } catch (const SingularWeightError&) {
            // Resample: random_weights guards the generic conditions but an
            // enumerated graph can still hit an unguarded coincidence.
            continue;
        }
    }
    return out;
}

}  // namespace gw
