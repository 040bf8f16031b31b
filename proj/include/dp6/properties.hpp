#pragma once

// Randomized and exhaustive property checks that run without the test
// framework, for the CLI and the acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

namespace dp6 {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::size_t cases = 0;
  std::string detail;  ///< first counterexample, or a summary
};

/// Ring and field axioms, inverses, Galois maps and the embedding on random elements.
PropertyResult field_axioms(std::uint64_t seed = 12345, std::size_t cases = 1000);
/// Reduced bases of five ideals are unchanged by shuffling, rescaling and
/// padding the generators.
PropertyResult groebner_uniqueness(std::uint64_t seed = 2024, std::size_t shuffles = 20);
/// sum v_j dF/dv_j = 3 F, and the Euler element lies in the kernel of the
/// graded Jacobian map, for Y', Y'' and three family samples.
PropertyResult euler_kernel();
/// kappa(g h) = kappa(g) kappa(h) for all pairs of powers of sigma on Y'.
PropertyResult twist_multiplicativity();
/// age(g) + age(g^-1) equals the number of nonzero weights, for the computed
/// singularity types and for every weight vector of order up to 12.
PropertyResult reid_tai_pairing();
/// Compiled numeric evaluation agrees with exact evaluation then embedding.
PropertyResult numeric_exact_agreement(std::uint64_t seed = 99, std::size_t cases = 500);

std::vector<PropertyResult> run_properties();

}  // namespace dp6
