#include <gtest/gtest.h>

#include "dp6/hodge.hpp"
#include "dp6/parse.hpp"

using namespace dp6;

namespace {

Poly V(const std::string& s) { return parse_poly(s, rings::v()); }

/// Independent count: rank of the unreduced map into all pairs of cubics
/// together with (A,0), (B,0), (0,A), (0,B).
std::size_t oracle_cokernel(const CIThreefold& x) {
  std::vector<Monomial> mons;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b)
      for (int c = b; c < 6; ++c) mons.push_back(Monomial::var(a) * Monomial::var(b) * Monomial::var(c));
  const std::size_t n = mons.size();
  CycMatrix m(2 * n, 40);
  auto put = [&](const Poly& f, std::size_t offset, std::size_t col) {
    for (const auto& t : f.terms())
      m(offset + static_cast<std::size_t>(std::find(mons.begin(), mons.end(), t.mon) - mons.begin()), col) = t.coeff;
  };
  for (int j = 0; j < 6; ++j)
    for (int k = 0; k < 6; ++k) {
      Poly v = Poly::variable(rings::v(), k);
      put(v * x.a.derivative(j), 0, static_cast<std::size_t>(6 * j + k));
      put(v * x.b.derivative(j), n, static_cast<std::size_t>(6 * j + k));
    }
  put(x.a, 0, 36);
  put(x.b, 0, 37);
  put(x.a, n, 38);
  put(x.b, n, 39);
  return 2 * n - rank(m);
}

CIThreefold fermat() {
  return CIThreefold::make("fermat", V("v0^3 + v1^3 + v2^3 + v3^3 + v4^3 + v5^3"),
                           V("v0^3 + 2*v1^3 + 3*v2^3 + 4*v3^3 + 5*v4^3 + 6*v5^3"));
}

const SolutionSet& yprime_nodes() {
  static const SolutionSet s = singular_points(y_prime());
  return s;
}

}  // namespace

TEST(GradedMap, YPrimeDimensions) {
  auto m = graded_jacobian_map(y_prime());
  EXPECT_EQ(m.cubics.size(), 56u);
  EXPECT_EQ(m.domain_dim(), 36u);
  EXPECT_EQ(m.codomain_dim(), 108u);
  EXPECT_EQ(m.rank, 35u);
  EXPECT_EQ(m.kernel_dim(), 1u);
  EXPECT_EQ(m.cokernel_dim(), 73u);
  EXPECT_EQ(oracle_cokernel(y_prime()), 73u);
}

TEST(GradedMap, EulerElementIsInTheKernel) {
  auto m = graded_jacobian_map(y_prime());
  std::vector<Poly> euler;
  for (int j = 0; j < 6; ++j) euler.push_back(Poly::variable(rings::v(), j));
  for (const auto& c : m.apply(euler)) EXPECT_TRUE(c.is_zero());
  // A and B themselves reduce to zero.
  for (const auto& c : m.reduce(y_prime().a)) EXPECT_TRUE(c.is_zero());
}

TEST(GradedMap, YDoublePrimeAgreesWithOracle) {
  auto m = graded_jacobian_map(y_double_prime());
  EXPECT_EQ(m.cokernel_dim(), oracle_cokernel(y_double_prime()));
  EXPECT_EQ(m.cokernel_dim(), 73u);
}

TEST(GradedMap, FermatRankNullity) {
  auto m = graded_jacobian_map(fermat());
  EXPECT_EQ(m.rank + m.kernel_dim(), 36u);
  EXPECT_EQ(m.cokernel_dim(), 108u - m.rank);
  EXPECT_EQ(m.cokernel_dim(), oracle_cokernel(fermat()));
}

TEST(GradedMap, ParallelMatchesSerial) {
  auto a = graded_jacobian_map(y_double_prime(), true);
  auto b = graded_jacobian_map(y_double_prime(), false);
  EXPECT_EQ(a.matrix, b.matrix);
}

TEST(GradedMap, DependentCubicsThrow) {
  auto x = y_prime();
  x.b = CycElem(2) * x.a;
  EXPECT_THROW(graded_jacobian_map(x), std::invalid_argument);
}

TEST(Cokernel, MonomialRepresentatives) {
  auto m = graded_jacobian_map(y_prime());
  auto c = cokernel_basis(m);
  ASSERT_EQ(c.size(), 73u);
  EXPECT_TRUE(std::is_sorted(c.coordinates.begin(), c.coordinates.end()));
  for (const auto& [g1, g2] : c.reps) {
    EXPECT_NE(g1.is_zero(), g2.is_zero());
    EXPECT_EQ((g1.is_zero() ? g2 : g1).size(), 1u);
  }
  // The representatives together with the image span the codomain.
  CycMatrix all(m.codomain_dim(), m.domain_dim() + c.size());
  for (std::size_t r = 0; r < m.codomain_dim(); ++r)
    for (std::size_t j = 0; j < m.domain_dim(); ++j) all(r, j) = m.matrix(r, j);
  for (std::size_t i = 0; i < c.size(); ++i) all(c.coordinates[i], m.domain_dim() + i) = 1;
  EXPECT_EQ(rank(all), m.codomain_dim());
}

TEST(Psi, YPrimeKernelIsTen) {
  const auto& nodes = yprime_nodes();
  ASSERT_EQ(nodes.size(), 72u);
  auto c = cokernel_basis(graded_jacobian_map(y_prime()));
  auto r = psi_kernel(y_prime(), c, nodes.points);
  EXPECT_EQ(r.conditions, 432u);
  EXPECT_EQ(r.psi_kernel_dim, 10u);
  EXPECT_EQ(r.ranks.size(), 3u);
  EXPECT_LE(r.max_jacobian_minor, 1e-7);
  h11_report(r, KnownThreefold::YPrime);
  EXPECT_EQ(r.h11, 10u);
  EXPECT_EQ(r.h11_source, H11Source::ComputedEquality);
}

TEST(Psi, ParallelMatchesSerial) {
  auto c = cokernel_basis(graded_jacobian_map(y_prime()));
  auto a = psi_conditions(y_prime(), c, yprime_nodes().points, true);
  auto b = psi_conditions(y_prime(), c, yprime_nodes().points, false);
  EXPECT_EQ((a - b).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Psi, NoPointsKeepsTheWholeCokernel) {
  auto c = cokernel_basis(graded_jacobian_map(fermat()));
  auto r = psi_kernel(fermat(), c, {});
  EXPECT_EQ(r.psi_kernel_dim, c.size());
  h11_report(r, KnownThreefold::Other);
  EXPECT_FALSE(r.h11.has_value());
}

TEST(Psi, UnstableRankIsReported) {
  // A single condition row whose singular values straddle the window.
  auto c = cokernel_basis(graded_jacobian_map(y_prime()));
  std::vector<CPoint> pts{yprime_nodes().points.front()};
  PsiOptions opt;
  opt.rank_tols = {1e-30, 0.99};
  EXPECT_THROW(psi_kernel(y_prime(), c, pts, opt), RankPlateauError);
}

TEST(Psi, ExternalValueForYDoublePrime) {
  HodgeReport r;
  r.psi_kernel_dim = 38;
  h11_report(r, KnownThreefold::YDoublePrime);
  EXPECT_EQ(r.h11, 2u);
  EXPECT_EQ(to_string(r.h11_source), "external-paper-value");
}
