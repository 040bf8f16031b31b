#pragma once

// Projective schemes used throughout: the named forms, the del Pezzo
// embedding and its projection, complete-intersection threefolds cut out by
// two cubics, their singular schemes, and the monomial map into P^8.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dp6/groebner.hpp"
#include "dp6/poly.hpp"

namespace dp6 {

/// Forms on P^5 loaded from the shipped data file (or any text in the same
/// format).  Lookup is by name.
class NamedFormRegistry {
 public:
  static NamedFormRegistry from_text(std::string_view text);
  /// The registry compiled into the library.
  static const NamedFormRegistry& standard();
  /// Text the standard registry was built from.
  static std::string_view standard_text();

  const Poly& get(const std::string& name) const;
  bool has(const std::string& name) const;
  const std::vector<std::pair<std::string, Poly>>& entries() const { return entries_; }

  /// Q1, Q2, F1..F7 in this order.
  std::vector<Poly> dtilde_generators() const;

 private:
  std::vector<std::pair<std::string, Poly>> entries_;
};

/// V(A, B) in P^5 for two linearly independent cubics.
struct CIThreefold {
  std::string name;
  Poly a, b;

  /// Throws std::invalid_argument unless a, b are linearly independent
  /// homogeneous cubics in the v-ring.
  static CIThreefold make(std::string name, Poly a, Poly b);
  std::vector<Poly> gens() const { return {a, b}; }
};

CIThreefold y_prime();
CIThreefold y_double_prime();

/// Components are forms of a common degree in the target's source ring.
struct RationalMapSpec {
  std::string name;
  RingPtr source, target;
  std::vector<Poly> components;

  static RationalMapSpec make(std::string name, RingPtr source, RingPtr target, std::vector<Poly> components);
  /// Image of a point, or nullopt where every component vanishes.
  std::optional<std::vector<CycElem>> apply(std::span<const CycElem> point) const;
};

/// P^2 -> P^6 by the seven cubics through the coordinate points.
RationalMapSpec del_pezzo_embed();
/// The same map followed by forgetting u6, into P^5 with coordinates v.
RationalMapSpec projected_del_pezzo();
/// P^4 -> P^8, [l0^3 : l1^3 : l1^2 l2 : ... : l4^3].
RationalMapSpec monomial_map_p8();

/// Homogeneous ideal of the closure of the image, computed by eliminating
/// t and the source variables from <u_i - t * m_i>.
GroebnerBasis image_ideal(const RationalMapSpec& map);

/// Eliminates the last variable of a homogeneous ideal (projection from the
/// last coordinate point) and renames the surviving variables into `target`.
GroebnerBasis project_last_coordinate(const GroebnerBasis& ideal, const RingPtr& target);

/// Dehomogenized A, B and the fifteen 2x2 minors of the Jacobian, in chart i.
std::vector<Poly> singular_scheme_ideal(const CIThreefold& x, int chart);

/// True iff every outer generator reduces to zero modulo the inner basis.
bool contains_scheme(const GroebnerBasis& inner, std::span<const Poly> outer);

/// Integer coefficients a_1..a_7, b_1..b_7 in [-9, 9] \ {0} drawn from a
/// seeded generator; resampled while the two cubics are dependent.
struct FamilySample {
  std::uint64_t seed = 0;
  std::vector<int> a, b;
  CIThreefold threefold;
};
FamilySample generic_family_sample(std::uint64_t seed);

/// Cubics A(a) = sum a_i F_i for an arbitrary coefficient vector.
Poly family_member(std::span<const CycElem> coeffs);

}  // namespace dp6
