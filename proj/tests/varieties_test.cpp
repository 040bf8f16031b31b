#include <gtest/gtest.h>

#include "dp6/parse.hpp"
#include "dp6/varieties.hpp"

using namespace dp6;

namespace {

const NamedFormRegistry& reg() { return NamedFormRegistry::standard(); }
Poly V(const std::string& s) { return parse_poly(s, rings::v()); }

}  // namespace

TEST(Registry, FormsAndIdentities) {
  EXPECT_EQ(reg().get("Q1"), V("v3*v4 - v2*v5"));
  EXPECT_EQ(reg().get("F4"), V("v1*v2*v3 - v0*v4*v5"));
  EXPECT_EQ(reg().get("A1p"), reg().get("F1") + reg().get("F2") - reg().get("F6") - reg().get("F7"));
  EXPECT_EQ(reg().get("A2p"), reg().get("F2") - reg().get("F3") + reg().get("F5") - reg().get("F6"));
  EXPECT_EQ(reg().get("Q3"), reg().get("Q1") - reg().get("Q2"));
  EXPECT_EQ(reg().get("A2pp").coefficient(Monomial::var(0, 2) * Monomial::var(4)), CycElem(0, 0, 5, 0));
  EXPECT_EQ(reg().dtilde_generators().size(), 9u);
  EXPECT_THROW(reg().get("nope"), std::out_of_range);
}

TEST(Registry, EvaluationExamples) {
  std::vector<CycElem> ones(6, CycElem(1));
  EXPECT_TRUE(reg().get("A1p").evaluate(ones).is_zero());
  EXPECT_TRUE(reg().get("A2p").evaluate(ones).is_zero());
}

TEST(Threefold, Validation) {
  EXPECT_NO_THROW(y_prime());
  EXPECT_NO_THROW(y_double_prime());
  EXPECT_THROW(CIThreefold::make("bad", reg().get("F1"), CycElem(3) * reg().get("F1")), std::invalid_argument);
  EXPECT_THROW(CIThreefold::make("bad", reg().get("Q1"), reg().get("F1")), std::invalid_argument);
}

TEST(Maps, DelPezzoImages) {
  auto m = del_pezzo_embed();
  std::vector<CycElem> p{1, 1, 1};
  EXPECT_EQ(m.apply(p).value(), std::vector<CycElem>(7, CycElem(1)));
  std::vector<CycElem> q{1, 1, 0};
  EXPECT_EQ(m.apply(q).value(), (std::vector<CycElem>{1, 0, 0, 1, 0, 0, 0}));
  for (int i = 0; i < 3; ++i) {
    std::vector<CycElem> e(3, CycElem(0));
    e[static_cast<std::size_t>(i)] = 1;
    EXPECT_FALSE(m.apply(e).has_value());
  }
}

TEST(Maps, ConicImplicitization) {
  RingPtr t = rings::numbered("s", 2);
  RingPtr u = rings::numbered("w", 3);
  auto conic = RationalMapSpec::make("conic", t, u, {parse_poly("s0^2", t), parse_poly("s0*s1", t), parse_poly("s1^2", t)});
  auto g = image_ideal(conic);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.polys()[0], parse_poly("w0*w2 - w1^2", u).monic());
}

TEST(Maps, ImplicitizationIsSound) {
  for (const auto& m : {del_pezzo_embed(), monomial_map_p8()}) {
    auto g = image_ideal(m);
    for (const auto& p : g.polys()) EXPECT_TRUE(compose(p, m.components, m.source).is_zero()) << p;
  }
}

TEST(Maps, ProjectionGivesDelPezzoIdeal) {
  auto d6 = image_ideal(del_pezzo_embed());
  auto dd = projective_dimension_degree(d6);
  EXPECT_EQ(dd.dimension, 2);
  EXPECT_EQ(dd.degree, 6);
  auto proj = project_last_coordinate(d6, rings::v());
  auto typed = buchberger(reg().dtilde_generators());
  EXPECT_TRUE(ideal_equality(proj, typed));
  EXPECT_TRUE(ideal_equality(image_ideal(projected_del_pezzo()), typed));
}

TEST(Maps, MonomialMapImage) {
  auto g = image_ideal(monomial_map_p8());
  std::vector<Poly> expect;
  for (const char* s : {"-u1*u3 + u2^2", "-u1*u4 + u2*u3", "-u2*u4 + u3^2", "-u5*u7 + u6^2", "-u5*u8 + u6*u7",
                        "-u6*u8 + u7^2"})
    expect.push_back(parse_poly(s, rings::u8()));
  EXPECT_TRUE(ideal_equality(g, buchberger(expect)));
}

TEST(Containment, DelPezzoInThreefolds) {
  auto d = buchberger(reg().dtilde_generators());
  std::vector<Poly> yp{reg().get("A1p"), reg().get("A2p")};
  std::vector<Poly> ypp{reg().get("A1pp"), reg().get("A2pp")};
  std::vector<Poly> hyper{V("v0")};
  EXPECT_TRUE(contains_scheme(d, yp));
  EXPECT_TRUE(contains_scheme(d, ypp));
  EXPECT_FALSE(contains_scheme(d, hyper));
}

TEST(Family, SamplesAreDeterministic) {
  auto s1 = generic_family_sample(1), again = generic_family_sample(1);
  EXPECT_EQ(s1.a, again.a);
  EXPECT_EQ(s1.b, again.b);
  EXPECT_EQ(s1.threefold.a, again.threefold.a);
  for (int c : s1.a) {
    EXPECT_NE(c, 0);
    EXPECT_LE(std::abs(c), 9);
  }
  auto d = buchberger(reg().dtilde_generators());
  for (std::uint64_t seed : {1u, 2u, 3u}) EXPECT_TRUE(contains_scheme(d, generic_family_sample(seed).threefold.gens()));
}

TEST(SingularScheme, Structure) {
  auto gens = singular_scheme_ideal(y_prime(), 0);
  EXPECT_EQ(gens.size(), 17u);
  for (const auto& g : gens) EXPECT_EQ(g.ring(), rings::chart(0));
}
