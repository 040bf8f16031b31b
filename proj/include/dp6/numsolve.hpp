#pragma once

// Numeric solutions of zero-dimensional systems through eigenvectors of
// multiplication matrices, Newton refinement, projective deduplication,
// node certification and point classification.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp6/groebner.hpp"
#include "dp6/numeric.hpp"
#include "dp6/varieties.hpp"

namespace dp6 {

/// Every numeric threshold used downstream.
struct Tolerances {
  double dedup = 1e-6;    ///< Fubini-Study distance below which points merge
  double newton = 1e-10;  ///< Newton step size at which iteration stops
  double accept = 1e-8;   ///< largest residual of an accepted point
  double census = 1e-7;   ///< normalized evaluation counted as vanishing
  double match = 1e-7;    ///< distance for matching against exact points
  double odp_gap = 1e-4;  ///< smallest/largest restricted Hessian singular value
  double snap = 1e-6;     ///< root-of-unity snapping and numeric rank

  static Tolerances defaults() { return {}; }
  /// Every threshold ten times tighter.
  static Tolerances strict();
};

/// Homogeneous coordinates scaled so the first maximal-modulus coordinate is 1.
struct CPoint {
  std::vector<Complex> coords;
  double residual = 0;
  std::vector<int> charts;  ///< charts whose solve produced this point
};

struct ChartData {
  int chart = 0;
  std::size_t quotient_dim = 0;
  std::size_t accepted = 0;  ///< eigen-solutions passing the residual test
  std::size_t rejected = 0;
};

struct SolutionSet {
  std::vector<CPoint> points;
  std::vector<ChartData> charts;
  std::size_t size() const { return points.size(); }
};

class NotZeroDimensional : public std::runtime_error {
 public:
  explicit NotZeroDimensional(int chart)
      : std::runtime_error("system in chart " + std::to_string(chart) + " is not zero-dimensional"), chart_(chart) {}
  int chart() const { return chart_; }

 private:
  int chart_;
};

/// Generators in the affine chart v_chart = 1 of P^(n), n + 1 = ambient.
struct ChartSystem {
  int chart = 0;
  std::vector<Poly> gens;
};

struct SolveOptions {
  Tolerances tol;
  std::uint64_t seed = 1;
  GroebnerCache cache;
  bool parallel = true;  ///< solve charts concurrently
};

/// Accepted solutions of one chart lifted to P^n, before deduplication.
struct ChartSolution {
  ChartData data;
  std::vector<CPoint> points;
};
ChartSolution solve_chart(const ChartSystem& sys, int ambient, const SolveOptions& opt);

/// Merges points closer than tol.dedup and sorts deterministically.
SolutionSet merge_solutions(std::vector<ChartSolution> parts, const Tolerances& tol);

/// Throws NotZeroDimensional naming the first offending chart.
SolutionSet solve_zero_dim(std::span<const ChartSystem> systems, int ambient, const SolveOptions& opt = {});

/// All six charts of the singular scheme of X.
SolutionSet singular_points(const CIThreefold& x, const SolveOptions& opt = {});

struct SmoothnessResult {
  bool smooth = false;
  /// Number of singular points; -1 when the singular locus has positive dimension.
  long singular_points = 0;
  std::vector<ChartData> charts;
};

/// Singular locus of the projective scheme cut out by homogeneous `gens`
/// (assumed to generate its ideal): points where the Jacobian has rank
/// below `codim`, found chart by chart.
SmoothnessResult smoothness_check(std::span<const Poly> gens, int codim, const SolveOptions& opt = {});

enum class OdpVerdict { ODP, Degenerate, NotIsolatedSuspect };
std::string to_string(OdpVerdict v);

struct ODPCertificate {
  CPoint point;
  int chart = 0;
  /// lambda[0] A + lambda[1] B has vanishing gradient at the point.
  std::array<Complex, 2> lambda{};
  std::array<double, 2> jacobian_sv{};
  std::vector<double> hessian_sv;  ///< restricted Hessian, decreasing
  OdpVerdict verdict = OdpVerdict::Degenerate;
};

/// Node test for V(a, b) at p.  a and b need not be cubics.  Throws
/// std::invalid_argument when the Jacobian has rank 2 at p.
ODPCertificate certify_odp(const Poly& a, const Poly& b, const CPoint& p, const Tolerances& tol = {});
ODPCertificate certify_odp(const CIThreefold& x, const CPoint& p, const Tolerances& tol = {});
std::vector<ODPCertificate> certify_all(const CIThreefold& x, std::span<const CPoint> pts, const Tolerances& tol = {});
std::vector<ODPCertificate> certify_all_serial(const CIThreefold& x, std::span<const CPoint> pts,
                                               const Tolerances& tol = {});

struct MatchReport {
  bool ok = false;
  std::string error;  ///< set on cardinality mismatch
  int galois = 1;     ///< conjugation applied to the expected points
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  ///< (found, expected)
  std::vector<std::size_t> unmatched_found, unmatched_expected;
  double max_distance = 0;
};

/// Bijection between numeric and exact points, retrying under the Galois
/// conjugations 5, 7, 11 when the direct embedding fails.
MatchReport match_points(std::span<const CPoint> found, std::span<const std::vector<CycElem>> expected,
                         const Tolerances& tol = {});

struct NamedForms {
  std::string name;
  std::vector<Poly> forms;
};

struct Census {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> vanishes;  ///< [point][name]
  std::vector<std::size_t> counts;          ///< per name

  /// Names vanishing at a point, in registry order.
  std::vector<std::string> pattern(std::size_t point) const;
  std::size_t count(const std::string& name) const;
};

/// A point lies on a named set when every form's normalized value
/// |f(p)| / |f|_1 is at most tol.census.
Census membership_census(std::span<const CPoint> pts, std::span<const NamedForms> sets, const Tolerances& tol = {});
bool vanishes_at(const NumPoly& f, std::span<const Complex> p, double tol);

}  // namespace dp6
