#pragma once

// First-order deformations of a nodal complete intersection V(A, B) in P^5:
// the degree-one Jacobian map into pairs of cubics modulo A and B, its
// cokernel, and the subspace cut out by the node conditions.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dp6/numsolve.hpp"
#include "dp6/varieties.hpp"

namespace dp6 {

/// (g_0..g_5) -> (sum g_j dA/dv_j, sum g_j dB/dv_j) from linear forms to
/// (cubics / span(A, B))^2.
struct GradedMap {
  RingPtr ring;
  std::vector<Monomial> cubics;    ///< all 56 cubic monomials, grevlex decreasing
  std::vector<std::size_t> kept;   ///< indices into cubics of the quotient coordinates
  CycMatrix reducer;               ///< rref of the coefficient rows of A and B over `cubics`
  /// Row r: copy r / kept.size(), monomial cubics[kept[r % kept.size()]].
  /// Column 6 j + k: g_j = v_k, all other g zero.
  CycMatrix matrix;
  std::size_t rank = 0;

  std::size_t domain_dim() const { return matrix.cols(); }
  std::size_t codomain_dim() const { return matrix.rows(); }
  std::size_t kernel_dim() const { return domain_dim() - rank; }
  std::size_t cokernel_dim() const { return codomain_dim() - rank; }

  /// Coordinates of a cubic modulo span(A, B).
  std::vector<CycElem> reduce(const Poly& cubic) const;
  /// Image of six linear forms.
  std::vector<CycElem> apply(std::span<const Poly> g) const;
};

/// Throws std::invalid_argument when A, B are not independent cubics.
GradedMap graded_jacobian_map(const CIThreefold& x, bool parallel = true);

struct CokernelBasis {
  /// Codomain coordinates not hit by pivots of the image, in increasing order.
  std::vector<std::size_t> coordinates;
  /// (g1, g2) for each coordinate: one monomial in one copy.
  std::vector<std::pair<Poly, Poly>> reps;
  std::size_t size() const { return coordinates.size(); }
};
CokernelBasis cokernel_basis(const GradedMap& m);

struct PsiOptions {
  std::vector<double> rank_tols{1e-10, 1e-9, 1e-8, 1e-7, 1e-6};
  /// Extra shuffled row orders, one per seed.
  std::vector<std::uint64_t> shuffle_seeds{1, 2};
  bool parallel = true;
};

class RankPlateauError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class H11Source { None, ComputedEquality, ExternalPaperValue };
std::string to_string(H11Source s);

struct HodgeReport {
  std::size_t cokernel_dim = 0;
  std::size_t psi_kernel_dim = 0;  ///< h^{2,1} of the small resolution
  std::size_t conditions = 0;      ///< rows of the condition matrix
  /// Rank at each tolerance, first for the natural row order then per shuffle.
  std::vector<std::vector<std::size_t>> ranks;
  std::vector<double> singular_values;
  /// Largest Jacobian 2x2 minor over the points, divided by the squared
  /// norm of the larger gradient.
  double max_jacobian_minor = 0;
  std::optional<std::size_t> h11;
  H11Source h11_source = H11Source::None;
};

/// Node conditions g1(p) dB/dv_j(p) - g2(p) dA/dv_j(p) = 0 as complex rows
/// over the cokernel coordinates.
CMatrix psi_conditions(const CIThreefold& x, const CokernelBasis& c, std::span<const CPoint> pts,
                       bool parallel = true);

/// Throws RankPlateauError when the numeric rank changes across the
/// tolerance window or the row orders.
HodgeReport psi_kernel(const CIThreefold& x, const CokernelBasis& c, std::span<const CPoint> pts,
                       const PsiOptions& opt = {});

enum class KnownThreefold { YPrime, YDoublePrime, Other };
/// Fills h11: equal to h^{2,1} for Y', the published value 2 for Y'', nothing otherwise.
void h11_report(HodgeReport& r, KnownThreefold which);

}  // namespace dp6
