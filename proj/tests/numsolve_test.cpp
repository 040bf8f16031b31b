#include <gtest/gtest.h>

#include <random>

#include "dp6/numsolve.hpp"
#include "dp6/parse.hpp"

using namespace dp6;

namespace {

Poly V(const std::string& s) { return parse_poly(s, rings::v()); }
Poly C0(const std::string& s) { return parse_poly(s, rings::chart(0)); }

CPoint point(std::vector<Complex> c) { return {normalize_projective(c), 0, {}}; }

}  // namespace

TEST(Numeric, NumPolyAgreesWithExactEvaluation) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  const auto& reg = NamedFormRegistry::standard();
  for (const auto& [name, f] : reg.entries()) {
    NumPoly g(f);
    for (int t = 0; t < 5; ++t) {
      std::vector<Complex> x;
      for (int i = 0; i < 6; ++i) x.emplace_back(u(rng), u(rng));
      EXPECT_LT(std::abs(g(x) - f.evaluate(std::span<const Complex>(x))), 1e-12) << name;
      std::vector<Complex> grad(6);
      EXPECT_LT(std::abs(g.eval_grad(x, grad) - g(x)), 1e-12);
      for (int j = 0; j < 6; ++j)
        EXPECT_LT(std::abs(grad[static_cast<std::size_t>(j)] - f.derivative(j).evaluate(std::span<const Complex>(x))),
                  1e-12);
    }
  }
}

TEST(Numeric, ProjectiveHelpers) {
  std::vector<Complex> p{1, 2, Complex(0, -2)};
  auto n = normalize_projective(p);
  EXPECT_EQ(n[1], Complex(1));  // first of the two maximal coordinates
  EXPECT_NEAR(std::abs(n[2] - Complex(0, -1)), 0, 1e-15);
  std::vector<Complex> q{Complex(0, 3), Complex(0, 6), 6};
  EXPECT_LT(fs_distance(p, q), 1e-15);
  std::vector<Complex> e0{1, 0, 0}, e1{0, 1, 0};
  EXPECT_NEAR(fs_distance(e0, e1), 1, 1e-15);
  std::vector<Complex> near{1, 1e-9, 0};
  EXPECT_NEAR(fs_distance(e0, near), 1e-9, 1e-18);
}

TEST(Solve, DoublePointCountsOnce) {
  std::vector<ChartSystem> sys{{0, {C0("y1^2"), C0("y2"), C0("y3"), C0("y4"), C0("y5")}}};
  auto s = solve_zero_dim(sys, 6);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.charts[0].quotient_dim, 2u);
  EXPECT_EQ(s.points[0].coords[0], Complex(1));
  for (int i = 1; i < 6; ++i) EXPECT_LT(std::abs(s.points[0].coords[static_cast<std::size_t>(i)]), 1e-6);
}

TEST(Solve, RejectsPositiveDimensionalChart) {
  std::vector<ChartSystem> sys{{0, {C0("y1"), C0("y2")}}};
  try {
    solve_zero_dim(sys, 6);
    FAIL() << "expected NotZeroDimensional";
  } catch (const NotZeroDimensional& e) {
    EXPECT_EQ(e.chart(), 0);
  }
}

TEST(Solve, PointsSeenFromSeveralCharts) {
  // Four points with no zero coordinate, so every chart sees all of them.
  std::vector<Poly> hom{V("v0^2 - v1^2"), V("v1^2 - 4*v2^2"), V("v3 - v0"), V("v4 - v1"), V("v5 - v2")};
  std::vector<ChartSystem> sys;
  for (int c = 0; c < 6; ++c) {
    ChartSystem s{c, {}};
    for (const auto& f : hom) s.gens.push_back(dehomogenize(f, c));
    sys.push_back(s);
  }
  auto s = solve_zero_dim(sys, 6);
  EXPECT_EQ(s.size(), 4u);
  for (const auto& p : s.points) {
    EXPECT_EQ(p.charts.size(), 6u);
    EXPECT_LE(p.residual, 1e-12);
  }
  auto serial = sys;
  SolveOptions opt;
  opt.parallel = false;
  auto s2 = solve_zero_dim(serial, 6, opt);
  ASSERT_EQ(s2.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_LT(fs_distance(s.points[i].coords, s2.points[i].coords), 1e-12);
}

TEST(Odp, ModelNode) {
  Poly a = V("v0*v1 - v2*v3"), b = V("v4");
  auto c = certify_odp(a, b, point({0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(c.verdict, OdpVerdict::ODP);
  EXPECT_EQ(c.chart, 5);
  ASSERT_EQ(c.hessian_sv.size(), 4u);
  EXPECT_NEAR(c.hessian_sv[3], c.hessian_sv[0], 1e-12);
  EXPECT_GT(c.hessian_sv[3], 0.5);
}

TEST(Odp, CuspIsNotANode) {
  Poly a = V("v0*v1 - v2^2"), b = V("v4");
  auto c = certify_odp(a, b, point({0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(c.verdict, OdpVerdict::NotIsolatedSuspect);
}

TEST(Odp, RankZeroIsDegenerate) {
  Poly a = V("v0*v1 - v2*v3"), b = V("v4^2");
  auto c = certify_odp(a, b, point({0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(c.verdict, OdpVerdict::Degenerate);
}

TEST(Odp, SmoothPointThrows) {
  Poly a = V("v0"), b = V("v1");
  EXPECT_THROW(certify_odp(a, b, point({0, 0, 1, 0, 0, 0})), std::invalid_argument);
}

TEST(Match, EmptyAndGalois) {
  std::vector<CPoint> none;
  std::vector<std::vector<CycElem>> no_exact;
  EXPECT_TRUE(match_points(none, no_exact).ok);

  std::vector<CycElem> ex{1, CycElem::zeta(1), 0, 0, 0, 0};
  std::vector<std::vector<CycElem>> exact{ex};
  std::vector<CPoint> direct{point({1, CycElem::zeta(1).embed(), 0, 0, 0, 0})};
  auto r = match_points(direct, exact);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.galois, 1);
  std::vector<CPoint> conj{point({1, CycElem::zeta(5).embed(), 0, 0, 0, 0})};
  r = match_points(conj, exact);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.galois, 5);
  std::vector<CPoint> two{direct[0], conj[0]};
  r = match_points(two, exact);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.error.empty());
}

TEST(Census, CountsPerName) {
  std::vector<CPoint> pts{point({1, 1, 1, 1, 1, 1}), point({1, 0, 0, 0, 0, 0})};
  std::vector<NamedForms> sets{{"A1p", {NamedFormRegistry::standard().get("A1p")}}, {"v1", {V("v1")}}};
  auto c = membership_census(pts, sets);
  EXPECT_EQ(c.count("A1p"), 2u);
  EXPECT_EQ(c.count("v1"), 1u);
  EXPECT_EQ(c.pattern(1), (std::vector<std::string>{"A1p", "v1"}));
}

TEST(Smoothness, DelPezzoIsSmooth) {
  auto r = smoothness_check(NamedFormRegistry::standard().dtilde_generators(), 3);
  EXPECT_TRUE(r.smooth);
}

TEST(Smoothness, FermatPairIsSmooth) {
  std::vector<Poly> g{V("v0^3 + v1^3 + v2^3 + v3^3 + v4^3 + v5^3"),
                      V("v0^3 + 2*v1^3 + 3*v2^3 + 4*v3^3 + 5*v4^3 + 6*v5^3")};
  auto r = smoothness_check(g, 2);
  EXPECT_TRUE(r.smooth);
  for (const auto& c : r.charts) EXPECT_EQ(c.quotient_dim, 0u);
}

TEST(Smoothness, YPrimeHas72Nodes) {
  auto y = y_prime();
  auto r = smoothness_check(y.gens(), 2);
  EXPECT_FALSE(r.smooth);
  EXPECT_EQ(r.singular_points, 72);
}
