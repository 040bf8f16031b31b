#pragma once

// Sparse multivariate polynomials over Q(zeta_12).

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp6/field.hpp"
#include "dp6/matrix.hpp"
#include "dp6/ring.hpp"

namespace dp6 {

class RingMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Term {
  Monomial mon;
  CycElem coeff;
};

/// Terms are kept strictly decreasing in the ring's order with no zero
/// coefficients, so the leading term is terms().front().
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const CycElem& c);
  static Poly variable(RingPtr ring, int i);
  static Poly monomial(RingPtr ring, const Monomial& m, const CycElem& c = CycElem(1));
  /// Sorts and combines arbitrary terms.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Adopts terms already in canonical order; no checks beyond debug asserts.
  static Poly from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.deg == 0); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mon; }
  const CycElem& lc() const { return terms_.front().coeff; }

  int total_degree() const;
  bool is_homogeneous() const;
  /// Coefficient of a monomial (zero when absent).
  CycElem coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const CycElem& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly mul_term(const Monomial& m, const CycElem& c) const;
  /// this - c * m * g, computed with a single merge.
  Poly sub_mul(const Monomial& m, const CycElem& c, const Poly& g) const;
  Poly pow(int e) const;

  Poly monic() const;
  /// Divides by the positive gcd of all rational coordinates after clearing
  /// denominators, so coefficients become coprime integers.
  Poly primitive() const;

  Poly derivative(int var) const;

  CycElem evaluate(std::span<const CycElem> point) const;
  Complex evaluate(std::span<const Complex> point) const;

  /// Same terms in another ring with identical variable names (order change).
  Poly in_ring(const RingPtr& target) const;

  /// Sum of absolute values of the embedded coefficients.
  double norm1() const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  void check_ring(const Poly& o) const {
    if (ring_ != o.ring_) throw RingMismatch("polynomials live in different rings");
  }
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

/// f(images[0], ..., images[n-1]); all images share a target ring.
Poly compose(const Poly& f, std::span<const Poly> images, const RingPtr& target);

/// f(M v): variable i is replaced by sum_j M(i,j) v_j.  M must be invertible.
Poly substitute_linear(const Poly& f, const CycMatrix& m);

/// Sets variable `chart` to one; the result lives in rings::chart_of(ring, chart).
/// Throws std::invalid_argument for non-homogeneous input.
Poly dehomogenize(const Poly& f, int chart);

/// Inverse of dehomogenize for a given degree d >= total degree.
Poly homogenize(const Poly& f, int chart, const RingPtr& projective_ring, int degree);

/// Moves f into `target`, sending variable i to var_map[i].  Variables with
/// var_map[i] < 0 must not occur in f.
Poly remap(const Poly& f, const RingPtr& target, std::span<const int> var_map);

/// Entry (i, j) = d f_i / d v_j.
std::vector<std::vector<Poly>> jacobian_matrix(std::span<const Poly> fs);

/// Determinant of a square matrix of polynomials (cofactor expansion; small sizes only).
Poly poly_determinant(const std::vector<std::vector<Poly>>& m);

/// All k x k minors of a rows x cols matrix of polynomials, rows/cols in
/// lexicographic subset order.
std::vector<Poly> minors(const std::vector<std::vector<Poly>>& m, int k);

}  // namespace dp6
