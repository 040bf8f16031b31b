#pragma once

// Finite-order linear automorphisms of P^5 acting on the threefolds: invariance,
// the action on named forms, fixed loci, orbits, the twist of the residue
// 3-form, tangent actions at fixed points and the resulting quotient
// singularity types.  Also the two elliptic curve automorphisms used in the
// product constructions.
//
// Conventions.  g acts on points by p -> M p.  Forms are pushed forward,
// g.f = f o g^-1, and so is the residue form: the twist of g is the scalar k
// with (g^-1)^* omega = k omega.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dp6/numsolve.hpp"
#include "dp6/varieties.hpp"

namespace dp6 {

class LinearAut {
 public:
  /// Throws std::invalid_argument unless m is square and invertible with
  /// some power m^n (n <= 60) scalar.
  static LinearAut from_matrix(std::string name, CycMatrix m);
  /// "0->3,1->4,..." meaning new coordinate i is old coordinate j, with an
  /// optional scalar "i->j*coeff".  A leading "name:" is accepted.
  static LinearAut from_spec(std::string_view spec, int n = 6);
  static LinearAut identity(int n = 6);

  const std::string& name() const { return name_; }
  const CycMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  /// Smallest n with matrix^n scalar.
  int order() const { return order_; }

  LinearAut compose(const LinearAut& h) const;  ///< this after h
  LinearAut power(long k) const;
  LinearAut inverse() const;

  std::vector<CycElem> apply(std::span<const CycElem> p) const;
  std::vector<Complex> apply(std::span<const Complex> p) const;
  /// f o g^-1.
  Poly push(const Poly& f) const;
  /// f o g.
  Poly pull(const Poly& f) const;

 private:
  std::string name_;
  CycMatrix m_;
  int order_ = 1;
};

LinearAut sigma();  ///< 0->3,1->4,2->0,3->5,4->2,5->1
LinearAut rho();    ///< sigma^2
LinearAut tau();    ///< sigma^3

/// Coefficients of f in span(basis), or nullopt.
std::optional<std::vector<CycElem>> express_in_span(const Poly& f, std::span<const Poly> basis);

struct Invariance {
  bool invariant = false;
  /// (A o g, B o g) = C (A, B) when invariant.
  CycMatrix c;
};
Invariance verify_invariance(const LinearAut& g, const CIThreefold& x);

struct FormImage {
  std::string name;
  Poly image;  ///< g.f
  /// Set when g.f = scalar * (a named form).
  std::optional<std::string> target;
  CycElem scalar;
  /// Coefficients over the table's basis.
  std::vector<CycElem> coords;
};
struct FormActionTable {
  std::vector<std::string> basis;
  std::vector<FormImage> rows;
  const FormImage& row(const std::string& name) const;
};

class NotInSpan : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pushes each named form forward and writes it over `basis` (names in
/// `forms`).  Throws NotInSpan.
FormActionTable form_action_table(const LinearAut& g, const std::vector<std::pair<std::string, Poly>>& forms,
                                  const std::vector<std::string>& basis);
/// Q1, Q2, Q3, F1..F7 over the basis Q1, Q2, F1..F7.
FormActionTable form_action_table(const LinearAut& g, const NamedFormRegistry& reg = NamedFormRegistry::standard());

struct Eigenspace {
  int exponent = 0;  ///< eigenvalue zeta_12^exponent
  CycMatrix basis;   ///< one column per basis vector
};
/// Eigenspaces of g's matrix.  Throws std::invalid_argument when some
/// eigenvalue is not a 12th root of unity.
std::vector<Eigenspace> eigenspaces(const LinearAut& g);

struct FixedComponent {
  Eigenspace space;  ///< P(space) lies on X
  /// Linear forms cutting out P(space).
  std::vector<Poly> ideal;
};
struct FixedPoint {
  CPoint point;
  int exponent = 0;  ///< eigenspace it came from
  /// Exact coordinates when the eigenspace is a line.
  std::optional<std::vector<CycElem>> exact;
};
struct FixedLocus {
  std::vector<FixedComponent> components;
  std::vector<FixedPoint> points;
  std::vector<CPoint> cpoints() const;
};

class NotInvariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FixedLocus fixed_locus(const LinearAut& g, const CIThreefold& x, const SolveOptions& opt = {});

struct Orbits {
  std::vector<std::size_t> perm;  ///< g(S[i]) = S[perm[i]]
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> fixed;
};
/// Throws std::runtime_error when g does not map S to itself.
Orbits orbit_partition(const LinearAut& g, std::span<const CPoint> s, const Tolerances& tol = {});

struct TwistFactor {
  CycElem scalar;
  int chart = 0;
  std::array<int, 2> split{};  ///< the two chart variables in the Jacobian minor
  /// det(M_{g^-1}) / det(C_{g^-1}), an independent check.
  CycElem det_ratio;
};
class TwistNotConstant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
TwistFactor canonical_twist(const LinearAut& g, const CIThreefold& x, const SolveOptions& opt = {});

class SingularFixedPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class SnapFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TangentAction {
  /// Eigenvalue zeta_n^a_i, n = order of g, a_i sorted.
  std::vector<int> weights;
  int order = 1;
  std::vector<Complex> raw;
  double snap_distance = 0;
  std::vector<CycElem> exact() const;
  CycElem determinant() const;
};
/// Eigenvalues of dg on T_pX.
TangentAction local_tangent_action(const LinearAut& g, const CIThreefold& x, const CPoint& p,
                                   const Tolerances& tol = {});

class EllipticCurveModel {
 public:
  enum class Kind { Order2, Order3 };
  /// y^2 = x(x-1)(x-lambda), (x, y) -> (x, -y).
  static EllipticCurveModel order2(CycElem lambda = 2);
  /// y^2 = x^3 - 1.  The point map is (x, y) -> (zeta3^2 x, y), so the
  /// function x is pushed forward to zeta3 x.
  static EllipticCurveModel order3();

  Kind kind() const { return kind_; }
  int order() const { return kind_ == Kind::Order2 ? 2 : 3; }
  const Poly& equation() const { return eq_; }
  /// Point map (x, y) -> (alpha x, beta y).
  const CycElem& alpha() const { return alpha_; }
  const CycElem& beta() const { return beta_; }
  bool preserves_equation() const;

 private:
  Kind kind_ = Kind::Order2;
  Poly eq_;
  CycElem alpha_, beta_;
};

struct CurveFixedData {
  int fixed_points = 0;      ///< including the point at infinity
  CycElem tangent;           ///< dg at an affine fixed point
  CycElem form;              ///< pushforward eigenvalue on dx / y
  std::vector<std::vector<Complex>> affine_points;
};
CurveFixedData curve_fixed_data(const EllipticCurveModel& curve);

struct QuotientSingType {
  int order = 1;
  std::vector<int> weights;  ///< four residues, sorted
  long age_numerator = 0;    ///< age = age_numerator / order
  double age() const { return static_cast<double>(age_numerator) / order; }
  QuotientSingType inverse() const;
  int nonzero_weights() const;
  std::string str() const;  ///< e.g. "1/3(1,1,2,2)"
};
/// Throws std::invalid_argument when the orders differ.
QuotientSingType quotient_sing_type(const TangentAction& threefold, const EllipticCurveModel& curve);

/// Named lists of exact points shipped with the library.
struct ReferencePoint {
  std::string label;
  std::vector<CycElem> coords;
};
std::vector<ReferencePoint> reference_points(const std::string& list);
std::vector<std::vector<CycElem>> coords_of(std::span<const ReferencePoint> pts);

}  // namespace dp6
