#pragma once

// Double-precision complex view of exact polynomials, and the projective
// helpers shared by the numeric modules.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dp6/matrix.hpp"
#include "dp6/poly.hpp"

namespace dp6 {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Coefficients embedded once; evaluation then costs no exact arithmetic.
class NumPoly {
 public:
  NumPoly() = default;
  explicit NumPoly(const Poly& p);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  /// Sum of coefficient moduli.
  double norm1() const { return norm1_; }

  Complex operator()(std::span<const Complex> x) const;
  /// Value, with the gradient written into `grad` (size nvars).
  Complex eval_grad(std::span<const Complex> x, std::span<Complex> grad) const;

 private:
  int nvars_ = 0;
  int degree_ = 0;
  double norm1_ = 0;
  std::vector<std::vector<int>> exps_;
  std::vector<Complex> coeffs_;
};

std::vector<NumPoly> compile(std::span<const Poly> polys);

/// sin of the Fubini-Study angle between two points of P^n, computed from
/// the 2x2 minors so it stays accurate for nearby points.
double fs_distance(std::span<const Complex> p, std::span<const Complex> q);

/// Rescales so the first coordinate whose modulus is within `rel` of the
/// maximum becomes exactly 1.
std::vector<Complex> normalize_projective(std::span<const Complex> p, double rel = 1e-9);

Matrix<Complex> to_dense(const CMatrix& m);
CMatrix to_eigen(const Matrix<Complex>& m);

}  // namespace dp6
