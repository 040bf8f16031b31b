#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "dp6/parse.hpp"
#include "dp6/poly.hpp"

using namespace dp6;

namespace {

Poly P(const std::string& s) { return parse_poly(s, rings::v()); }

CycMatrix random_invertible(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    CycMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = CycElem(d(rng), 0, d(rng) % 2, 0);
    if (!determinant(m).is_zero()) return m;
  }
}

Poly random_cubic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5), var(0, 5);
  Poly f(rings::v());
  for (int t = 0; t < 6; ++t) {
    Monomial m = Monomial::var(var(rng)) * Monomial::var(var(rng)) * Monomial::var(var(rng));
    f += Poly::monomial(rings::v(), m, CycElem(d(rng), d(rng), 0, 0));
  }
  return f;
}

}  // namespace

TEST(Poly, ArithmeticExamples) {
  Poly a1 = P("v2*v3^2 - v0^2*v5") + P("v1*v3^2 - v0*v5^2") - P("v1*v2^2 - v0*v4^2") - P("v1^2*v2 - v4^2*v5");
  EXPECT_EQ(a1, P("(v2*v3^2 - v0^2*v5) + (v1*v3^2 - v0*v5^2) - (v1*v2^2 - v0*v4^2) - (v1^2*v2 - v4^2*v5)"));
  Poly f = P("v0*v1 - 3*v2");
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_TRUE((P("v3*v4 - v2*v5") * Poly(rings::v())).is_zero());
  EXPECT_EQ(P("(v0+v1)^2"), P("v0^2 + 2*v0*v1 + v1^2"));
}

TEST(Poly, RingMismatchThrows) {
  Poly a = P("v0");
  Poly b = parse_poly("x0", rings::x());
  EXPECT_THROW(a + b, RingMismatch);
  EXPECT_THROW(a * b, RingMismatch);
}

TEST(Poly, Derivatives) {
  EXPECT_EQ(P("v3*v4 - v2*v5").derivative(3), P("v4"));
  EXPECT_EQ(P("v2*v3^2").derivative(3), P("2*v2*v3"));
  EXPECT_THROW(P("v0").derivative(6), std::out_of_range);
}

TEST(Poly, EulerIdentity) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Poly f = random_cubic(rng);
    Poly e(rings::v());
    for (int j = 0; j < 6; ++j) e += Poly::variable(rings::v(), j) * f.derivative(j);
    ASSERT_EQ(e, CycElem(3) * f);
  }
}

TEST(Poly, EvaluateExamples) {
  std::vector<CycElem> ones(6, CycElem(1));
  EXPECT_TRUE(P("v2*v3^2 - v0^2*v5").evaluate(ones).is_zero());
  std::vector<CycElem> p{0, 0, 1, 0, 0, 1};
  EXPECT_EQ(P("v3*v4 - v2*v5").evaluate(p), CycElem(-1));
}

TEST(Poly, SubstituteLinearProperties) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int i = 0; i < 100; ++i) {
    Poly f = random_cubic(rng);
    CycMatrix m = random_invertible(rng, 6);
    Poly g = substitute_linear(f, m);
    std::vector<CycElem> pt;
    for (int k = 0; k < 6; ++k) pt.push_back(CycElem(d(rng), 0, 0, d(rng)));
    std::vector<CycElem> mp(6);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) mp[r] += m(r, c) * pt[c];
    ASSERT_EQ(g.evaluate(pt), f.evaluate(mp));
    if (i < 20) ASSERT_EQ(substitute_linear(g, inverse(m)), f);
  }
  CycMatrix singular(6, 6);
  EXPECT_THROW(substitute_linear(P("v0"), singular), FieldError);
}

TEST(Poly, NumericMatchesExact) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-4, 4);
  Poly f = random_cubic(rng) + CycElem::zeta12() * random_cubic(rng);
  for (int i = 0; i < 100; ++i) {
    std::vector<CycElem> pt;
    std::vector<Complex> num;
    for (int k = 0; k < 6; ++k) {
      pt.push_back(CycElem(d(rng), d(rng), 0, d(rng)));
      num.push_back(pt.back().embed());
    }
    Complex exact = f.evaluate(pt).embed();
    Complex approx = f.evaluate(std::span<const Complex>(num));
    ASSERT_LE(std::abs(exact - approx), 1e-10 * std::max(1.0, std::abs(exact)));
  }
}

TEST(Poly, Dehomogenize) {
  Poly q = dehomogenize(P("v3*v4 - v2*v5"), 0);
  EXPECT_EQ(q, parse_poly("y3*y4 - y2*y5", rings::chart(0)));
  EXPECT_EQ(dehomogenize(P("v0^2*v5"), 0), parse_poly("y5", rings::chart(0)));
  EXPECT_EQ(dehomogenize(P("7"), 2), Poly::constant(rings::chart(2), CycElem(7)));
  EXPECT_THROW(dehomogenize(P("v0 + v1^2"), 0), std::invalid_argument);
  Poly f = P("v1*v2^2 - v0*v4^2 + v3^3");
  EXPECT_EQ(homogenize(dehomogenize(f, 3), 3, rings::v(), 3), f);
}

TEST(Poly, Jacobian) {
  std::vector<Poly> qs{P("v3*v4 - v2*v5"), P("v0*v1 - v2*v5")};
  auto j = jacobian_matrix(qs);
  ASSERT_EQ(j.size(), 2u);
  ASSERT_EQ(j[0].size(), 6u);
  for (const auto& row : j)
    for (const auto& e : row) EXPECT_LE(e.total_degree(), 1);
  std::vector<Poly> lin{P("2*v0 - v3")};
  auto g = jacobian_matrix(lin);
  EXPECT_EQ(g[0][0], Poly::constant(rings::v(), CycElem(2)));
  EXPECT_EQ(g[0][3], Poly::constant(rings::v(), CycElem(-1)));
  EXPECT_EQ(minors(j, 2).size(), 15u);
}

TEST(Poly, TextRoundTrip) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    Poly f = random_cubic(rng) + CycElem::zeta(3) * random_cubic(rng);
    ASSERT_EQ(P(f.str()), f) << f.str();
  }
  EXPECT_THROW(P("v0 + w"), ParseError);
  EXPECT_THROW(P("v0 +"), ParseError);
}

TEST(Poly, DefinitionsWithContinuationLines) {
  auto defs = parse_definitions("a := v0 + v1\n  - v2\nb := a*a # square\n", rings::v());
  ASSERT_EQ(defs.size(), 2u);
  EXPECT_EQ(defs[0].second, P("v0 + v1 - v2"));
  EXPECT_EQ(defs[1].second, P("(v0 + v1 - v2)^2"));
  EXPECT_THROW(parse_definitions("a := v0\na := v1\n", rings::v()), ParseError);
}
