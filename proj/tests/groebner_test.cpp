#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dp6/groebner.hpp"
#include "dp6/parse.hpp"

using namespace dp6;

namespace {

std::vector<Poly> parse_all(const std::vector<std::string>& src, const RingPtr& ring) {
  std::vector<Poly> out;
  for (const auto& s : src) out.push_back(parse_poly(s, ring));
  return out;
}

std::vector<Poly> dtilde() {
  return parse_all({"v3*v4 - v2*v5", "v0*v1 - v2*v5", "v2*v3^2 - v0^2*v5", "v1*v3^2 - v0*v5^2",
                    "v2^2*v3 - v0^2*v4", "v1*v2*v3 - v0*v4*v5", "v1^2*v3 - v4*v5^2", "v1*v2^2 - v0*v4^2",
                    "v1^2*v2 - v4^2*v5"},
                   rings::v());
}

}  // namespace

TEST(Groebner, TrivialExamples) {
  auto g = buchberger(parse_all({"v0", "v1"}, rings::v()));
  EXPECT_EQ(g.polys(), parse_all({"v1", "v0"}, rings::v()));
  auto h = buchberger(parse_all({"v0^2 - v1^2", "v0 + v1"}, rings::v()));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.polys()[0], parse_poly("v0 + v1", rings::v()));
  auto unit = buchberger(parse_all({"v0", "v0 + 1"}, rings::v()));
  EXPECT_TRUE(unit.is_unit());
  std::vector<Poly> zero{Poly(rings::v())};
  auto z = buchberger(zero, rings::v());
  EXPECT_TRUE(z.is_zero_ideal());
  EXPECT_FALSE(quotient_dim(z).has_value());
}

TEST(Groebner, NormalForms) {
  auto g = buchberger(dtilde());
  EXPECT_TRUE(normal_form(parse_poly("v3*v4 - v2*v5", rings::v()), g).is_zero());
  Poly a1 = parse_poly("(v2*v3^2 - v0^2*v5) + (v1*v3^2 - v0*v5^2) - (v1*v2^2 - v0*v4^2) - (v1^2*v2 - v4^2*v5)",
                       rings::v());
  EXPECT_TRUE(g.contains(a1));
  EXPECT_FALSE(g.contains(parse_poly("v0", rings::v())));
  auto m = buchberger(parse_all({"v0", "v1", "v2", "v3", "v4", "v5"}, rings::v()));
  EXPECT_EQ(normal_form(Poly::constant(rings::v(), CycElem(1)), m), Poly::constant(rings::v(), CycElem(1)));
  EXPECT_TRUE(satisfies_buchberger_criterion(g));
}

TEST(Groebner, DelPezzoDegreeStructure) {
  auto g = buchberger(dtilde());
  int quadrics = 0;
  for (const auto& p : g.polys())
    if (p.total_degree() == 2) ++quadrics;
  EXPECT_EQ(quadrics, 2);
  auto dd = projective_dimension_degree(g);
  EXPECT_EQ(dd.dimension, 2);
  EXPECT_EQ(dd.degree, 6);
}

TEST(Groebner, DimensionDegree) {
  auto ci = parse_all({"(v2*v3^2 - v0^2*v5) + (v1*v3^2 - v0*v5^2) - (v1*v2^2 - v0*v4^2) - (v1^2*v2 - v4^2*v5)",
                       "(v1*v3^2 - v0*v5^2) - (v2^2*v3 - v0^2*v4) + (v1^2*v3 - v4*v5^2) - (v1*v2^2 - v0*v4^2)"},
                      rings::v());
  auto dd = projective_dimension_degree(ci);
  EXPECT_EQ(dd.dimension, 3);
  EXPECT_EQ(dd.degree, 9);
  auto h = projective_dimension_degree(parse_all({"v0"}, rings::v()));
  EXPECT_EQ(h.dimension, 4);
  EXPECT_EQ(h.degree, 1);
  auto empty = projective_dimension_degree(parse_all({"v0", "v1", "v2", "v3", "v4", "v5"}, rings::v()));
  EXPECT_EQ(empty.dimension, -1);
}

TEST(Groebner, Elimination) {
  RingPtr r = Ring::make({"t", "x", "y"});
  auto g = elimination_ideal(parse_all({"x - t", "y - t^2"}, r), 1);
  ASSERT_EQ(g.size(), 1u);
  RingPtr xy = Ring::make({"x", "y"});
  Poly expect = parse_poly("x^2 - y", xy);
  EXPECT_EQ(g.polys()[0], expect);
}

TEST(Groebner, QuotientAndMultiplication) {
  RingPtr r = Ring::make({"x", "y"});
  auto g = buchberger(parse_all({"x^2", "y^2"}, r));
  EXPECT_EQ(quotient_dim(g).value(), 4u);

  auto h = buchberger(parse_all({"x^2 - 2", "y"}, r));
  auto qb = quotient_basis(h);
  ASSERT_EQ(qb.size(), 2u);
  CycMatrix mx = multiplication_matrix(h, qb, 0);
  EXPECT_EQ(mx(0, 0) + mx(1, 1), CycElem(0));
  EXPECT_EQ(determinant(mx), CycElem(-2));

  auto k = buchberger(parse_all({"x^2 - 1", "y^2 - 1"}, r));
  auto kb = quotient_basis(k);
  CycMatrix a = multiplication_matrix(k, kb, 0), b = multiplication_matrix(k, kb, 1);
  EXPECT_EQ(a * b, b * a);

  auto inf = buchberger(parse_all({"x^2"}, r));
  EXPECT_FALSE(quotient_dim(inf).has_value());
  EXPECT_THROW(multiplication_matrix(inf, quotient_basis(inf), 0), std::invalid_argument);
}

// Reduced bases do not depend on the order or scaling of the generators.
TEST(Groebner, UniquenessUnderShuffles) {
  RingPtr x4 = rings::numbered("x", 4);
  std::vector<std::vector<Poly>> ideals{
      dtilde(),
      parse_all({"x0 + x1 + x2 + x3", "x0*x1 + x1*x2 + x2*x3 + x3*x0", "x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1",
                 "x0*x1*x2*x3 - 1"},
                x4),
      parse_all({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - z*x1*x2"}, x4),
      parse_all({"x0^2 - z*x1", "x1^3 - x2*x3 + 1", "x3^2 - x0 + 3"}, x4),
      parse_all({"v3*v4 - v2*v5", "v0*v1 - v2*v5", "v2*v3^2 - v0^2*v5 + (z^2-1)*(v1*v3^2 - v0*v5^2)"}, rings::v()),
  };
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> scale(1, 9);
  for (const auto& gens : ideals) {
    auto ref = buchberger(gens);
    ASSERT_TRUE(satisfies_buchberger_criterion(ref));
    for (int s = 0; s < 20; ++s) {
      std::vector<Poly> shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (auto& p : shuffled) p = CycElem(scale(rng) * (rng() % 2 ? 1 : -1), 0, rng() % 2, 0) * p;
      // Adding a combination of the others keeps the ideal unchanged.
      shuffled.push_back(shuffled[0] + CycElem(scale(rng)) * shuffled.back());
      auto g = buchberger(shuffled);
      ASSERT_TRUE(ideal_equality(ref, g));
    }
  }
}

TEST(Groebner, MembershipConsistency) {
  auto g = buchberger(dtilde());
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> var(0, 5), c(-3, 3);
  auto rnd = [&] {
    Poly f(rings::v());
    for (int k = 0; k < 4; ++k)
      f += Poly::monomial(rings::v(), Monomial::var(var(rng)) * Monomial::var(var(rng)), CycElem(c(rng)));
    return f;
  };
  for (int i = 0; i < 30; ++i) {
    Poly f = rnd(), h = rnd();
    ASSERT_EQ(normal_form(f * h, g), normal_form(normal_form(f, g) * h, g));
  }
}
