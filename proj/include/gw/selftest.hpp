#ifndef GW_SELFTEST_HPP
#define GW_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>

namespace gw::selftest {

// Randomized property checks. Each returns true when every sampled case
// passes; `cases` is the number of random instances.
bool rational_exactness(std::uint64_t seed, int cases);
bool cohomology_ring_axioms(std::uint64_t seed, int cases);
bool hl_inverse_identity(std::uint64_t seed, int cases);
bool series_ring_axioms(std::uint64_t seed, int cases);
bool truncation_coherence(std::uint64_t seed, int cases);
bool revert_roundtrip(std::uint64_t seed, int cases);
bool exp_products(std::uint64_t seed, int cases);

// Cross-oracle and structural checks.
bool schubert_duality(int max_m);
bool weight_independence(std::uint64_t seed, int trials);
bool oracle_agreement_degree_one(std::uint64_t seed);
bool mirror_identity_line(int order);
bool mirror_identity_conic(int order);
bool quintic_integrality(int order);
bool dimension_bookkeeping(int order);

/// Runs the full suite, printing one line per check; returns the number of
/// failing checks.
int run_all(std::uint64_t seed, std::ostream& os);

}  // namespace gw::selftest

#endif
