#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dp6/field.hpp"
#include "dp6/parse.hpp"

using namespace dp6;

namespace {

CycElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  return CycElem(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                 Rational(num(rng), den(rng)));
}

}  // namespace

TEST(Field, ReductionExamples) {
  EXPECT_EQ(CycElem::zeta12().pow(4), CycElem::zeta12().pow(2) - CycElem(1));
  EXPECT_EQ(CycElem::zeta6().pow(3), CycElem(-1));
  EXPECT_EQ(CycElem::zeta3() + CycElem::zeta3().pow(2), CycElem(-1));
  EXPECT_EQ(CycElem::zeta12().pow(12), CycElem(1));
  EXPECT_EQ(CycElem::zeta(-1) * CycElem::zeta(1), CycElem(1));
}

TEST(Field, RandomAxioms) {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 1000; ++i) {
    CycElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(Field, DivisionByZero) {
  EXPECT_THROW(CycElem(0).inverse(), FieldError);
  EXPECT_FALSE(checked_div(CycElem(1), CycElem(0)).ok);
  auto d = checked_div(CycElem(3), CycElem(2));
  ASSERT_TRUE(d.ok);
  EXPECT_EQ(d.value, CycElem(Rational(3, 2)));
}

TEST(Field, Embedding) {
  EXPECT_NEAR(std::abs(CycElem(1).embed() - Complex(1, 0)), 0, 1e-15);
  Complex z6(0.5, std::sqrt(3.0) / 2);
  EXPECT_NEAR(std::abs(CycElem::zeta6().embed() - z6), 0, 1e-14);
  EXPECT_NEAR(std::abs((CycElem::zeta12().pow(2) - CycElem(1)).embed() - (z6 - 1.0)), 0, 1e-14);
  Complex z = zeta12_embedded();
  EXPECT_NEAR(std::abs(std::pow(z, 12) - 1.0), 0, 1e-12);
  EXPECT_NEAR(std::abs(std::pow(z, 4) - std::pow(z, 2) + 1.0), 0, 1e-12);
}

TEST(Field, EmbeddingIsMultiplicative) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    CycElem a = random_elem(rng), b = random_elem(rng);
    Complex ea = a.embed(), eb = b.embed();
    ASSERT_LE(std::abs((a * b).embed() - ea * eb), 1e-12 * (1 + std::abs(ea) * std::abs(eb)));
    ASSERT_LE(std::abs((a + b).embed() - (ea + eb)), 1e-12 * (1 + std::abs(ea) + std::abs(eb)));
  }
}

TEST(Field, Coerce) {
  EXPECT_EQ(CycElem::coerce(Subfield::Zeta6, 1), CycElem::zeta12().pow(2));
  EXPECT_EQ(CycElem::coerce(Subfield::Zeta3, 1), CycElem::zeta12().pow(2) - CycElem(1));
  EXPECT_EQ(CycElem::coerce(Subfield::Q, 5), CycElem(5));
  for (int k = 0; k < 12; ++k) {
    const double two_pi = 2 * std::acos(-1.0);
    auto check = [&](Subfield tag, int n) {
      Complex direct = std::polar(1.0, two_pi * k / n);
      EXPECT_NEAR(std::abs(CycElem::coerce(tag, k).embed() - direct), 0, 1e-12);
    };
    check(Subfield::Zeta3, 3);
    check(Subfield::Zeta6, 6);
    check(Subfield::Zeta12, 12);
  }
}

TEST(Field, GaloisIsAutomorphism) {
  std::mt19937_64 rng(99);
  for (int k : {1, 5, 7, 11}) {
    for (int i = 0; i < 100; ++i) {
      CycElem a = random_elem(rng), b = random_elem(rng);
      ASSERT_EQ((a * b).galois(k), a.galois(k) * b.galois(k));
      ASSERT_EQ((a + b).galois(k), a.galois(k) + b.galois(k));
    }
    EXPECT_EQ(CycElem::zeta12().galois(k), CycElem::zeta(k));
  }
}

TEST(Field, TextRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    CycElem a = random_elem(rng);
    ASSERT_EQ(parse_coeff(a.str()), a) << a.str();
  }
  EXPECT_EQ(parse_coeff("(5*z^2-5)"), CycElem(-5, 0, 5, 0));
  EXPECT_EQ(parse_coeff("3/4"), CycElem(Rational(3, 4)));
}
