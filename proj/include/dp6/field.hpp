#pragma once

// Exact arithmetic in Q and in the cyclotomic field Q(zeta_12).
//
// Elements of Q(zeta_12) are stored in the power basis 1, z, z^2, z^3 of
// Q[z]/(z^4 - z^2 + 1).  The complex embedding is fixed once and for all:
// z -> exp(2*pi*i/12).

#include <gmpxx.h>

#include <array>
#include <complex>
#include <ostream>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dp6 {

using Rational = mpq_class;
using Complex = std::complex<double>;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subfields of Q(zeta_12) the code and the input files refer to.
enum class Subfield { Q, Zeta3, Zeta6, Zeta12 };

class CycElem {
 public:
  CycElem() = default;
  CycElem(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  CycElem(const Rational& v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  CycElem(Rational c0, Rational c1, Rational c2, Rational c3);

  /// zeta_12^k for any integer k.
  static CycElem zeta(int k);
  static CycElem zeta12() { return zeta(1); }
  static CycElem zeta6() { return zeta(2); }
  static CycElem zeta3() { return zeta(4); }

  /// Image of zeta_n^k under the canonical inclusion Q(zeta_n) -> Q(zeta_12).
  /// For the tag Q the integer k itself is returned.
  static CycElem coerce(Subfield tag, int k);

  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  int sign_of_rational() const;  // only meaningful for rational elements

  CycElem operator-() const;
  CycElem& operator+=(const CycElem& o);
  CycElem& operator-=(const CycElem& o);
  CycElem& operator*=(const CycElem& o);
  CycElem& operator/=(const CycElem& o);

  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(const CycElem& a, const CycElem& b);
  friend CycElem operator/(CycElem a, const CycElem& b) { return a /= b; }
  friend bool operator==(const CycElem& a, const CycElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

  /// Multiplicative inverse; throws FieldError on zero.
  CycElem inverse() const;
  CycElem pow(long e) const;

  /// Galois automorphism zeta -> zeta^k, k in {1, 5, 7, 11}.
  CycElem galois(int k) const;

  /// Image under the fixed embedding zeta_12 -> exp(2 pi i / 12).
  Complex embed() const;

  /// Least common multiple of the denominators of the four coordinates.
  mpz_class denominator_lcm() const;

  /// Text form compatible with the polynomial parser, e.g. "(5*z^2-5)".
  std::string str() const;

  /// Cheap order used for canonical sorting; not a field order.
  friend bool lex_less(const CycElem& a, const CycElem& b);

 private:
  std::array<Rational, 4> c_{};
};

inline std::ostream& operator<<(std::ostream& os, const CycElem& a) { return os << a.str(); }

/// Division that reports failure instead of throwing.
struct DivResult {
  CycElem value;
  bool ok = false;
};
DivResult checked_div(const CycElem& a, const CycElem& b);

/// Embedding of zeta_12 used everywhere.
Complex zeta12_embedded();

}  // namespace dp6
