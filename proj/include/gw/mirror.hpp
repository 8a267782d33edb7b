#ifndef GW_MIRROR_HPP
#define GW_MIRROR_HPP

#include <string>
#include <vector>

#include "gw/cohomology.hpp"
#include "gw/series.hpp"

namespace gw {

/// Ambient projective space P^n together with a split bundle
/// O(l_1) + ... + O(l_r). The zero locus is Fano or Calabi-Yau when
/// sum l_i <= n+1, which the normalization procedure requires.
struct GeometrySpec {
    int ambient_dim = 0;
    std::vector<int> bundle_degrees;
    int trunc_order = 0;

    void validate() const;
    int rank() const { return static_cast<int>(bundle_degrees.size()); }
    int degree_sum() const;
    /// Fano index of the zero locus: n+1 - sum l_i.
    int fano_index() const { return ambient_dim + 1 - degree_sum(); }
    CohClass top_chern() const;
};

enum class JForm {
    reduced_j,      // J of P^n, prefactor stripped, q^0 term 1
    capped_i,       // hypergeometric I-series capped with c_top(E)
    normalized_je,  // J_E after the mirror normalization
};

/// A generating series together with the convention it satisfies. reduced_j
/// and normalized_je obey the J-form contract: the q^0 coefficient is the
/// constant class (1 resp. c_top(E)) and the total hbar^{-1} part vanishes.
struct JSeries {
    QSeries payload;
    JForm form_tag;
};

/// Reduced J-function of P^n: the q^d coefficient is
/// prod_{m=1..d} (H + m hbar)^{-(n+1)}.
JSeries j_projective(int ambient_dim, int trunc_order);

/// Uncapped hypergeometric ratio: q^d coefficient
///   [prod_i prod_{m=1..l_i d} (l_i H + m hbar)] * prod_{m=1..d} (H + m hbar)^{-(n+1)}.
QSeries i_function_uncapped(const GeometrySpec& spec);

/// The capped I-series: c_top(E) times the uncapped ratio.
JSeries i_function(const GeometrySpec& spec);

struct NormalizeResult {
    JSeries je;              // normalized_je
    ScalarSeries mirror_map; // f = g_1/F; the mirror change of variables is Q = q e^f
    ScalarSeries shift_g0;   // hbar^{-1} scalar part of the uncapped I
    ScalarSeries unit_f;     // hbar^0 scalar part F of the uncapped I
};

/// Mirror normalization: decomposes the uncapped I as
///   F(q) 1 + hbar^{-1} (g_0(q) 1 + g_1(q) H) + O(hbar^{-2}),
/// divides by F, multiplies by e^{-(g_0/F)/hbar} and e^{-(g_1/F) H/hbar},
/// substitutes the inverted mirror variable q = q(Q), Q = q e^{g_1/F}, and
/// re-caps with c_top(E). The output satisfies the J-form contract, which is
/// checked; a violation signals a formula bug. Passing a normalized_je input
/// returns it unchanged (the procedure is idempotent).
NormalizeResult normalize(const JSeries& capped_i, const GeometrySpec& spec);

/// Y isomorphic to P^1, embedded in P^2 as a curve of degree e in {1, 2} -
/// the two cases where J_Y is known in closed form.
struct EmbeddingModel {
    int bundle_degree = 1;

    static EmbeddingModel line() { return {1}; }
    static EmbeddingModel conic() { return {2}; }
    static EmbeddingModel from_name(const std::string& name);

    void validate() const;
    std::string name() const { return bundle_degree == 1 ? "line" : "conic"; }
    GeometrySpec geometry(int trunc_order) const { return {2, {bundle_degree}, trunc_order}; }
};

/// Pushforward along the embedding: on classes i_*(1) = e H, i_*(omega) = H^2
/// (projection formula with i^*(H) = e omega), and q^beta -> q^{e beta} on
/// Novikov variables. JY must be the reduced J of P^1.
QSeries pushforward(const EmbeddingModel& model, const JSeries& jy, int trunc_order);

struct Mismatch {
    int q_degree;
    int hbar_exp;
    int h_power;
    Rational lhs;
    Rational rhs;
};

struct VerificationReport {
    std::string model;
    int order = 0;
    bool verified = false;
    std::vector<Mismatch> mismatches;

    std::string to_json() const;
};

/// Coefficient-by-coefficient comparison of i_*(J_Y) against the normalized
/// J_E for the given embedding model, up to q^order.
VerificationReport verify_mirror_identity(const EmbeddingModel& model, int order);

/// Expected dimension of M_{0,npts}(P^n, d); only genus 0 is supported.
int expected_dim(int ambient_dim, int genus, int npts, int curve_degree);

/// Rank of the section bundle E_d (pointed = false) or of the subbundle E'_d
/// of sections vanishing at the marked point (pointed = true).
int ed_rank(const GeometrySpec& spec, int curve_degree, bool pointed);

/// Checks the dimension bookkeeping constraint on every nonzero coefficient
/// of a normalized J_E: at q^d, the (hbar^{-k}, H^p) entries must satisfy
/// p = n - (expected_dim - ed_rank' - (k-2)) + rank E, with k >= 2.
/// Returns the offending (d, hbar, H) triples, empty when all pass.
std::vector<Mismatch> je_degree_violations(const JSeries& je, const GeometrySpec& spec);

}  // namespace gw

#endif
