#include "dp6/varieties.hpp"

#include <random>
#include <stdexcept>

#include "dp6/parse.hpp"

namespace dp6 {

extern const char* const kFormsText;  // generated from data/forms.txt

NamedFormRegistry NamedFormRegistry::from_text(std::string_view text) {
  NamedFormRegistry r;
  r.entries_ = parse_definitions(text, rings::v());
  return r;
}

std::string_view NamedFormRegistry::standard_text() { return kFormsText; }

const NamedFormRegistry& NamedFormRegistry::standard() {
  static const NamedFormRegistry r = from_text(kFormsText);
  return r;
}

const Poly& NamedFormRegistry::get(const std::string& name) const {
  for (const auto& [n, p] : entries_)
    if (n == name) return p;
  throw std::out_of_range("no form named " + name);
}

bool NamedFormRegistry::has(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.first == name) return true;
  return false;
}

std::vector<Poly> NamedFormRegistry::dtilde_generators() const {
  std::vector<Poly> out;
  for (const char* n : {"Q1", "Q2", "F1", "F2", "F3", "F4", "F5", "F6", "F7"}) out.push_back(get(n));
  return out;
}

CIThreefold CIThreefold::make(std::string name, Poly a, Poly b) {
  for (const Poly* p : {&a, &b}) {
    if (p->is_zero() || p->ring() != rings::v() || !p->is_homogeneous() || p->total_degree() != 3)
      throw std::invalid_argument(name + ": generators must be nonzero cubic forms in v0..v5");
  }
  if (a.lc() * b == b.lc() * a) throw std::invalid_argument(name + ": cubics are linearly dependent");
  return {std::move(name), std::move(a), std::move(b)};
}

CIThreefold y_prime() {
  const auto& r = NamedFormRegistry::standard();
  return CIThreefold::make("Y'", r.get("A1p"), r.get("A2p"));
}

CIThreefold y_double_prime() {
  const auto& r = NamedFormRegistry::standard();
  return CIThreefold::make("Y''", r.get("A1pp"), r.get("A2pp"));
}

RationalMapSpec RationalMapSpec::make(std::string name, RingPtr source, RingPtr target, std::vector<Poly> components) {
  if (static_cast<int>(components.size()) != target->nvars())
    throw std::invalid_argument(name + ": one component per target coordinate");
  int deg = -1;
  bool all_zero = true;
  for (const auto& c : components) {
    if (c.is_zero()) continue;
    all_zero = false;
    if (c.ring() != source || !c.is_homogeneous()) throw std::invalid_argument(name + ": components must be forms");
    if (deg < 0) deg = c.total_degree();
    if (c.total_degree() != deg) throw std::invalid_argument(name + ": components of different degrees");
  }
  if (all_zero) throw std::invalid_argument(name + ": all components vanish");
  return {std::move(name), std::move(source), std::move(target), std::move(components)};
}

std::optional<std::vector<CycElem>> RationalMapSpec::apply(std::span<const CycElem> point) const {
  std::vector<CycElem> out;
  bool any = false;
  for (const auto& c : components) {
    out.push_back(c.is_zero() ? CycElem(0) : c.evaluate(point));
    any = any || !out.back().is_zero();
  }
  if (!any) return std::nullopt;
  return out;
}

namespace {

std::vector<Poly> parse_list(const std::vector<std::string>& src, const RingPtr& ring) {
  std::vector<Poly> out;
  for (const auto& s : src) out.push_back(parse_poly(s, ring));
  return out;
}

const std::vector<std::string> kDelPezzoCubics{"x0*x1^2", "x0*x2^2", "x1^2*x2", "x0^2*x1",
                                               "x2^2*x1", "x0^2*x2", "x0*x1*x2"};

}  // namespace

RationalMapSpec del_pezzo_embed() {
  return RationalMapSpec::make("del Pezzo embedding", rings::x(), rings::u6(), parse_list(kDelPezzoCubics, rings::x()));
}

RationalMapSpec projected_del_pezzo() {
  std::vector<std::string> six(kDelPezzoCubics.begin(), kDelPezzoCubics.begin() + 6);
  return RationalMapSpec::make("projected del Pezzo", rings::x(), rings::v(), parse_list(six, rings::x()));
}

RationalMapSpec monomial_map_p8() {
  return RationalMapSpec::make(
      "monomial map", rings::l(), rings::u8(),
      parse_list({"l0^3", "l1^3", "l1^2*l2", "l2^2*l1", "l2^3", "l3^3", "l3^2*l4", "l4^2*l3", "l4^3"}, rings::l()));
}

GroebnerBasis image_ideal(const RationalMapSpec& map) {
  const int ns = map.source->nvars(), nt = map.target->nvars();
  std::vector<std::string> names{"t_"};
  for (const auto& n : map.source->names()) names.push_back(n + "_s");
  for (const auto& n : map.target->names()) names.push_back(n);
  RingPtr big = Ring::make(names);
  std::vector<int> src_map(static_cast<std::size_t>(ns));
  for (int i = 0; i < ns; ++i) src_map[static_cast<std::size_t>(i)] = 1 + i;
  Poly t = Poly::variable(big, 0);
  std::vector<Poly> graph;
  for (int i = 0; i < nt; ++i)
    graph.push_back(Poly::variable(big, 1 + ns + i) - t * remap(map.components[static_cast<std::size_t>(i)], big, src_map));
  GroebnerBasis elim = elimination_ideal(graph, 1 + ns);
  std::vector<Poly> moved;
  for (const auto& p : elim.polys()) moved.push_back(p.in_ring(map.target));
  return GroebnerBasis(map.target, moved, graph, elim.stats());
}

GroebnerBasis project_last_coordinate(const GroebnerBasis& ideal, const RingPtr& target) {
  const RingPtr& src = ideal.ring();
  const int n = src->nvars();
  if (target->nvars() != n - 1) throw std::invalid_argument("project_last_coordinate: target has wrong dimension");
  std::vector<std::string> names{src->name(n - 1)};
  for (int i = 0; i < n - 1; ++i) names.push_back(src->name(i));
  RingPtr reordered = Ring::make(names);
  std::vector<int> to_reordered(static_cast<std::size_t>(n));
  for (int i = 0; i < n - 1; ++i) to_reordered[static_cast<std::size_t>(i)] = i + 1;
  to_reordered[static_cast<std::size_t>(n - 1)] = 0;
  std::vector<Poly> gens;
  for (const auto& p : ideal.polys()) gens.push_back(remap(p, reordered, to_reordered));
  GroebnerBasis elim = elimination_ideal(gens, 1);
  std::vector<int> ident(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) ident[static_cast<std::size_t>(i)] = i;
  std::vector<Poly> moved;
  for (const auto& p : elim.polys()) moved.push_back(remap(p, target, ident));
  return buchberger(moved, target);
}

std::vector<Poly> singular_scheme_ideal(const CIThreefold& x, int chart) {
  if (chart < 0 || chart >= 6) throw std::out_of_range("chart index");
  std::vector<Poly> out{dehomogenize(x.a, chart), dehomogenize(x.b, chart)};
  std::vector<Poly> ab{x.a, x.b};
  for (const auto& m : minors(jacobian_matrix(ab), 2)) {
    if (m.is_zero())
      out.push_back(Poly(rings::chart(chart)));
    else
      out.push_back(dehomogenize(m, chart));
  }
  return out;
}

bool contains_scheme(const GroebnerBasis& inner, std::span<const Poly> outer) {
  for (const auto& f : outer)
    if (!inner.contains(f)) return false;
  return true;
}

Poly family_member(std::span<const CycElem> coeffs) {
  if (coeffs.size() != 7) throw std::invalid_argument("family_member: seven coefficients expected");
  const auto& r = NamedFormRegistry::standard();
  Poly f(rings::v());
  for (int i = 0; i < 7; ++i) f += coeffs[static_cast<std::size_t>(i)] * r.get("F" + std::to_string(i + 1));
  return f;
}

FamilySample generic_family_sample(std::uint64_t seed) {
  // mt19937_64 output is fixed by the standard; the reduction to [-9, 9]
  // is done by hand because distributions are implementation-defined.
  std::mt19937_64 rng(seed);
  auto draw = [&rng] {
    int v = static_cast<int>(rng() % 18);
    return v < 9 ? v - 9 : v - 8;
  };
  for (;;) {
    FamilySample s;
    s.seed = seed;
    std::vector<CycElem> ca, cb;
    for (int i = 0; i < 7; ++i) {
      s.a.push_back(draw());
      ca.emplace_back(s.a.back());
    }
    for (int i = 0; i < 7; ++i) {
      s.b.push_back(draw());
      cb.emplace_back(s.b.back());
    }
    Poly a = family_member(ca), b = family_member(cb);
    if (a.lc() * b == b.lc() * a) continue;
    s.threefold = CIThreefold::make("sample " + std::to_string(seed), a, b);
    return s;
  }
}

}  // namespace dp6
