#include "dp6/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "dp6/hodge.hpp"
#include "dp6/numeric.hpp"
#include "dp6/parse.hpp"
#include "dp6/symmetry.hpp"

namespace dp6 {

namespace {

CycElem random_elem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  return CycElem(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                 Rational(num(rng), den(rng)));
}

std::vector<Poly> parse_all(std::initializer_list<const char*> texts, const RingPtr& r) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(parse_poly(t, r));
  return out;
}

PropertyResult fail(PropertyResult r, const std::string& why) {
  r.pass = false;
  r.detail = why;
  return r;
}

}  // namespace

PropertyResult field_axioms(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"field axioms", true, 0, {}};
  std::mt19937_64 rng(seed);
  const CycElem one(1), zero(0);
  for (std::size_t i = 0; i < cases; ++i, ++r.cases) {
    CycElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    std::ostringstream ctx;
    ctx << "a = " << a << ", b = " << b << ", c = " << c;
    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) return fail(r, "associativity: " + ctx.str());
    if (a + b != b + a || a * b != b * a) return fail(r, "commutativity: " + ctx.str());
    if (a * (b + c) != a * b + a * c) return fail(r, "distributivity: " + ctx.str());
    if (a + zero != a || a * one != a || a - a != zero) return fail(r, "identities: " + ctx.str());
    if (!a.is_zero() && a * a.inverse() != one) return fail(r, "inverse: " + ctx.str());
    if (!b.is_zero() && (a / b) * b != a) return fail(r, "division: " + ctx.str());
    for (int k : {5, 7, 11})
      if ((a * b).galois(k) != a.galois(k) * b.galois(k) || (a + b).galois(k) != a.galois(k) + b.galois(k))
        return fail(r, "galois " + std::to_string(k) + ": " + ctx.str());
    const Complex ea = a.embed(), eb = b.embed();
    if (std::abs((a * b).embed() - ea * eb) > 1e-9 * (1 + std::abs(ea * eb)))
      return fail(r, "embedding: " + ctx.str());
  }
  r.detail = std::to_string(r.cases) + " random triples";
  return r;
}

PropertyResult groebner_uniqueness(std::uint64_t seed, std::size_t shuffles) {
  PropertyResult r{"Groebner basis uniqueness", true, 0, {}};
  RingPtr x4 = rings::numbered("x", 4);
  const std::vector<std::vector<Poly>> ideals{
      NamedFormRegistry::standard().dtilde_generators(),
      parse_all({"x0 + x1 + x2 + x3", "x0*x1 + x1*x2 + x2*x3 + x3*x0", "x0*x1*x2 + x1*x2*x3 + x2*x3*x0 + x3*x0*x1",
                 "x0*x1*x2*x3 - 1"},
                x4),
      parse_all({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - z*x1*x2"}, x4),
      parse_all({"x0^2 - z*x1", "x1^3 - x2*x3 + 1", "x3^2 - x0 + 3"}, x4),
      parse_all({"v3*v4 - v2*v5", "v0*v1 - v2*v5", "v2*v3^2 - v0^2*v5 + (z^2-1)*(v1*v3^2 - v0*v5^2)"}, rings::v()),
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> scale(1, 9);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    auto ref = buchberger(ideals[i]);
    if (!satisfies_buchberger_criterion(ref)) return fail(r, "ideal " + std::to_string(i) + ": S-pair check failed");
    for (std::size_t s = 0; s < shuffles; ++s, ++r.cases) {
      std::vector<Poly> gens = ideals[i];
      std::shuffle(gens.begin(), gens.end(), rng);
      for (auto& p : gens) p = CycElem(scale(rng) * (rng() % 2 ? 1 : -1), 0, static_cast<long>(rng() % 2), 0) * p;
      gens.push_back(gens[0] + CycElem(scale(rng)) * gens.back());
      if (!ideal_equality(ref, buchberger(gens)))
        return fail(r, "ideal " + std::to_string(i) + ", shuffle " + std::to_string(s));
    }
  }
  r.detail = std::to_string(ideals.size()) + " ideals x " + std::to_string(shuffles) + " shuffles";
  return r;
}

PropertyResult euler_kernel() {
  PropertyResult r{"Euler identity and kernel", true, 0, {}};
  std::vector<CIThreefold> xs{y_prime(), y_double_prime()};
  for (std::uint64_t s : {1, 2, 3}) xs.push_back(generic_family_sample(s).threefold);
  std::vector<Poly> euler;
  for (int j = 0; j < 6; ++j) euler.push_back(Poly::variable(rings::v(), j));
  for (const auto& x : xs) {
    for (const Poly* f : {&x.a, &x.b}) {
      Poly sum(rings::v());
      for (int j = 0; j < 6; ++j) sum = sum + euler[static_cast<std::size_t>(j)] * f->derivative(j);
      if (sum != CycElem(3) * *f) return fail(r, x.name + ": Euler identity");
    }
    auto m = graded_jacobian_map(x);
    for (const auto& c : m.apply(euler))
      if (!c.is_zero()) return fail(r, x.name + ": Euler element not in the kernel");
    ++r.cases;
  }
  r.detail = std::to_string(r.cases) + " threefolds";
  return r;
}

PropertyResult twist_multiplicativity() {
  PropertyResult r{"twist multiplicativity", true, 0, {}};
  const auto x = y_prime();
  std::vector<CycElem> k;
  for (int a = 0; a < 6; ++a) k.push_back(canonical_twist(sigma().power(a), x).scalar);
  if (k[0] != CycElem(1)) return fail(r, "identity twist is " + k[0].str());
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b, ++r.cases) {
      auto composed = canonical_twist(sigma().power(a).compose(sigma().power(b)), x).scalar;
      if (composed != k[static_cast<std::size_t>(a)] * k[static_cast<std::size_t>(b)])
        return fail(r, "sigma^" + std::to_string(a) + " sigma^" + std::to_string(b) + ": " + composed.str());
    }
  r.detail = "kappa(sigma) = " + k[1].str();
  return r;
}

PropertyResult reid_tai_pairing() {
  PropertyResult r{"Reid-Tai pairing", true, 0, {}};
  auto check = [&](const QuotientSingType& q) {
    ++r.cases;
    return q.age_numerator + q.inverse().age_numerator == static_cast<long>(q.order) * q.nonzero_weights();
  };
  for (int n = 2; n <= 12; ++n)
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (int c = b; c < n; ++c)
          for (int d = c; d < n; ++d) {
            QuotientSingType q;
            q.order = n;
            q.weights = {a, b, c, d};
            q.age_numerator = a + b + c + d;
            if (!check(q)) return fail(r, "weights of order " + std::to_string(n) + ": " + q.str());
          }
  struct Case {
    LinearAut g;
    CIThreefold x;
    EllipticCurveModel curve;
  };
  for (const auto& [g, x, curve] : {Case{rho(), y_double_prime(), EllipticCurveModel::order3()},
                                    Case{tau(), y_prime(), EllipticCurveModel::order2()}})
    for (const auto& p : fixed_locus(g, x).points) {
      auto q = quotient_sing_type(local_tangent_action(g, x, p.point), curve);
      if (!check(q)) return fail(r, g.name() + ": " + q.str());
    }
  r.detail = std::to_string(r.cases) + " types";
  return r;
}

PropertyResult numeric_exact_agreement(std::uint64_t seed, std::size_t cases) {
  PropertyResult r{"numeric and exact evaluation", true, 0, {}};
  std::vector<Poly> forms;
  for (const auto& [name, f] : NamedFormRegistry::standard().entries()) forms.push_back(f);
  for (const auto& x : {y_prime(), y_double_prime()}) {
    forms.push_back(x.a);
    forms.push_back(x.b);
  }
  auto compiled = compile(forms);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    std::vector<CycElem> p;
    std::vector<Complex> pc;
    for (int j = 0; j < 6; ++j) {
      p.push_back(random_elem(rng));
      pc.push_back(p.back().embed());
    }
    double biggest = 0;
    for (const auto& c : pc) biggest = std::max(biggest, std::abs(c));
    for (std::size_t k = 0; k < forms.size(); ++k, ++r.cases) {
      Complex exact = forms[k].evaluate(p).embed();
      Complex num = compiled[k](pc);
      const double scale = compiled[k].norm1() * std::pow(1 + biggest, compiled[k].degree());
      if (std::abs(exact - num) > 1e-12 * scale)
        return fail(r, "form " + std::to_string(k) + " at case " + std::to_string(i));
    }
  }
  r.detail = std::to_string(r.cases) + " evaluations";
  return r;
}

std::vector<PropertyResult> run_properties() {
  return {field_axioms(), groebner_uniqueness(), euler_kernel(), twist_multiplicativity(), reid_tai_pairing(),
          numeric_exact_agreement()};
}

}  // namespace dp6
