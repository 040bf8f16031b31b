#pragma once

// Text format for polynomials, e.g. "v0*v1 - v2*v5" or "(5*z^2-5)*v1^2*v2".
// Coefficients: integers, fractions a/b, and z for zeta_12 (zeta12, zeta6,
// zeta3 are accepted as aliases).  Juxtaposition multiplies.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dp6/poly.hpp"

namespace dp6 {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

Poly parse_poly(std::string_view text, const RingPtr& ring);
CycElem parse_coeff(std::string_view text);

/// "name := poly" lines; '#' starts a comment.  Later definitions may refer
/// to earlier names.
std::vector<std::pair<std::string, Poly>> parse_definitions(std::string_view text, const RingPtr& ring);

}  // namespace dp6
