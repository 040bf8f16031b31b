#pragma once

// Reduced Groebner bases (Buchberger with the Gebauer-Moeller criteria,
// normal selection and fraction-free reduction with content removal),
// normal forms, elimination, and quotient-ring data for zero-dimensional
// ideals.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dp6/matrix.hpp"
#include "dp6/poly.hpp"

namespace dp6 {

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced, monic basis sorted by increasing leading monomial.  The input
/// generators are kept for auditing.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Poly> basis, std::vector<Poly> original, GroebnerStats stats = {})
      : ring_(std::move(ring)), basis_(std::move(basis)), original_(std::move(original)), stats_(stats) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& polys() const { return basis_; }
  const std::vector<Poly>& original() const { return original_; }
  const GroebnerStats& stats() const { return stats_; }
  std::size_t size() const { return basis_.size(); }

  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }
  bool is_zero_ideal() const { return basis_.empty(); }

  bool contains(const Poly& f) const;

  /// One polynomial per line in the parser's text format.
  std::string serialize() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.ring_ == b.ring_ && a.basis_ == b.basis_;
  }

 private:
  RingPtr ring_;
  std::vector<Poly> basis_;
  std::vector<Poly> original_;
  GroebnerStats stats_;
};

/// All generators must share one ring; its order is used.  `ring` is only
/// needed when every generator is zero.
GroebnerBasis buchberger(std::span<const Poly> gens, RingPtr ring = nullptr);
/// Moves the generators into the same variables with `order` first.
GroebnerBasis buchberger(std::span<const Poly> gens, MonOrder order);

/// buchberger() memoized on disk.  Entries are keyed by a hash of the ring
/// and the generators; an empty directory disables caching.
class GroebnerCache {
 public:
  GroebnerCache() = default;
  explicit GroebnerCache(std::string dir) : dir_(std::move(dir)) {}
  /// Directory from the CYVERIFY_CACHE environment variable, if set.
  static GroebnerCache from_env();

  GroebnerBasis compute(std::span<const Poly> gens, RingPtr ring = nullptr) const;
  const std::string& dir() const { return dir_; }

 private:
  std::string dir_;
};

/// Fully reduced remainder of f modulo the polynomials of G.
Poly normal_form(const Poly& f, const GroebnerBasis& g);
/// Remainder against an arbitrary list of monic reducers.
Poly reduce(const Poly& f, std::span<const Poly> reducers);

/// S-polynomial of two monic polynomials.
Poly s_polynomial(const Poly& f, const Poly& g);

/// True iff every S-pair of the basis reduces to zero against it.
bool satisfies_buchberger_criterion(const GroebnerBasis& g);

/// Intersection of the ideal with the subring generated by the variables
/// after the first k.  The result lives in the ring of the remaining
/// variables (same names, grevlex).
GroebnerBasis elimination_ideal(std::span<const Poly> gens, int k);

/// Reduced bases are unique, so equality of ideals is equality of bases.
bool ideal_equality(const GroebnerBasis& a, const GroebnerBasis& b);

/// Standard monomials of G.  `finite` is false when the quotient is
/// infinite-dimensional; then `monomials` is empty.
struct QuotientBasis {
  std::vector<Monomial> monomials;
  bool finite = false;
  std::size_t size() const { return monomials.size(); }
  /// Position of m, or -1.
  int index_of(const Monomial& m) const;
};

QuotientBasis quotient_basis(const GroebnerBasis& g);
/// nullopt for infinite-dimensional quotients.
std::optional<std::size_t> quotient_dim(const GroebnerBasis& g);

/// Column j holds the coordinates of NF(x_var * b_j) in the basis b.
/// Throws std::invalid_argument for an infinite quotient.
CycMatrix multiplication_matrix(const GroebnerBasis& g, const QuotientBasis& b, int var);

struct DimensionDegree {
  int dimension = -1;  ///< projective dimension, -1 for the empty scheme
  long degree = 0;
};
/// From the Hilbert series of the leading-term ideal; generators homogeneous.
DimensionDegree projective_dimension_degree(std::span<const Poly> gens);
DimensionDegree projective_dimension_degree(const GroebnerBasis& g);

}  // namespace dp6
