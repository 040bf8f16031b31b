#include "dp6/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dp6 {

namespace {

const Poly& deref(const Poly& p) { return p; }
const Poly& deref(const Poly* p) { return *p; }

template <typename Seq>
const Poly* find_reducer(const Monomial& m, const Seq& reducers) {
  for (const auto& g : reducers) {
    const Poly& p = deref(g);
    if (p.lm().divides(m)) return &p;
  }
  return nullptr;
}

Poly drop_leading(const Poly& p, std::size_t count) {
  const auto& t = p.terms();
  return Poly::from_sorted(p.ring(), std::vector<Term>(t.begin() + static_cast<std::ptrdiff_t>(count), t.end()));
}

template <typename Seq>
Poly reduce_by(const Poly& f, const Seq& reducers) {
  if (f.is_zero() || reducers.empty()) return f;
  std::vector<Term> rem;
  Poly p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    if (const Poly* r = find_reducer(lt.mon, reducers)) {
      CycElem c = r->lc().is_one() ? lt.coeff : lt.coeff * r->lc().inverse();
      p = p.sub_mul(lt.mon / r->lm(), c, *r);
      continue;
    }
    // Move the whole run of irreducible leading terms at once.
    std::size_t k = 0;
    const auto& ts = p.terms();
    while (k < ts.size() && !find_reducer(ts[k].mon, reducers)) rem.push_back(ts[k++]);
    p = drop_leading(p, k);
  }
  return Poly::from_sorted(f.ring(), std::move(rem));
}

}  // namespace

Poly reduce(const Poly& f, std::span<const Poly> reducers) { return reduce_by(f, reducers); }

Poly normal_form(const Poly& f, const GroebnerBasis& g) {
  if (!f.is_zero() && f.ring() != g.ring()) throw RingMismatch("normal_form: ring differs from basis ring");
  return reduce(f, g.polys());
}

bool GroebnerBasis::contains(const Poly& f) const { return normal_form(f, *this).is_zero(); }

std::string GroebnerBasis::serialize() const {
  std::ostringstream os;
  for (const auto& p : basis_) os << p.str() << '\n';
  return os.str();
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = lcm(f.lm(), g.lm());
  Poly a = f.mul_term(l / f.lm(), f.lc().inverse());
  return a.sub_mul(l / g.lm(), g.lc().inverse(), g);
}

namespace {

// Fraction-free arithmetic used inside the Buchberger loop.  Basis elements
// carry integer coordinates and a positive rational-integer leading
// coefficient, so a reduction step only scales by integers.

mpz_class content(const CycElem& c) {
  mpz_class g = 0;
  for (const auto& q : c.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  return g;
}

// Smallest product of Galois conjugates of c that makes c times it rational.
CycElem norm_cofactor(const CycElem& c) {
  if (c.is_rational()) return CycElem(1);
  const int ks[3] = {5, 7, 11};
  for (int a = 0; a < 3; ++a)
    if (c.galois(ks[a]) == c) return c.galois(ks[(a + 1) % 3]);
  return c.galois(5) * c.galois(7) * c.galois(11);
}

Poly integral_lc(const Poly& f) {
  Poly g = (norm_cofactor(f.lc()) * f).primitive();
  return g.lc().sign_of_rational() < 0 ? -g : g;
}

mpz_class int_lc(const Poly& f) { return f.lc()[0].get_num(); }

// Reduces every term from position `start` on.  The result is a nonzero
// integer multiple of the true remainder, made primitive.
template <typename Seq>
Poly reduce_ff(const Poly& f, const Seq& reducers, std::size_t start = 0) {
  if (f.is_zero()) return f;
  Poly p = f.primitive();
  std::size_t k = start, steps = 0;
  while (k < p.size()) {
    const Term& t = p.terms()[k];
    const Poly* r = find_reducer(t.mon, reducers);
    if (!r) {
      ++k;
      continue;
    }
    mpz_class a = int_lc(*r);
    mpz_class g = gcd(a, content(t.coeff));
    CycElem c = t.coeff * CycElem(Rational(1, 1) / Rational(g));
    Monomial m = t.mon / r->lm();
    if (a != g) p = CycElem(Rational(a / g)) * p;
    p = p.sub_mul(m, c, *r);
    if (++steps % 8 == 0) p = p.primitive();
  }
  return p.primitive();
}

Poly s_polynomial_ff(const Poly& f, const Poly& g) {
  Monomial l = lcm(f.lm(), g.lm());
  mpz_class a = int_lc(f), b = int_lc(g), d = gcd(a, b);
  Poly s = f.mul_term(l / f.lm(), CycElem(Rational(b / d)));
  return s.sub_mul(l / g.lm(), CycElem(Rational(a / d)), g);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

  // Returns false once the unit ideal is reached.
  bool insert(Poly f, int sugar) {
    f = reduce_ff(f, active_view());
    if (f.is_zero()) return true;
    if (f.is_constant()) {
      unit_ = true;
      return false;
    }
    polys_.push_back(integral_lc(f));
    sugar_.push_back(sugar);
    active_.push_back(true);
    update(polys_.size() - 1);
    return true;
  }

  void run() {
    while (!unit_ && !pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (better(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs_reduced;
      Poly s = s_polynomial_ff(polys_[p.i], polys_[p.j]);
      std::size_t before = polys_.size();
      if (!insert(std::move(s), p.sugar)) break;
      if (polys_.size() == before) ++stats_.zero_reductions;
    }
  }

  GroebnerBasis finish(std::vector<Poly> original) const {
    if (unit_)
      return GroebnerBasis(ring_, {Poly::constant(ring_, CycElem(1))}, std::move(original), stats_);
    std::vector<Poly> g = active_polys();
    const Ring& r = *ring_;
    std::sort(g.begin(), g.end(), [&r](const Poly& a, const Poly& b) { return r.less(a.lm(), b.lm()); });
    std::vector<Poly> out;
    out.reserve(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<const Poly*> others;
      for (std::size_t m = 0; m < g.size(); ++m)
        if (m != k) others.push_back(m < k ? &out[m] : &g[m]);
      out.push_back(integral_lc(reduce_ff(g[k], others, 1)));
    }
    for (auto& p : out) p = p.monic();
    return GroebnerBasis(ring_, std::move(out), std::move(original), stats_);
  }

 private:
  RingPtr ring_;
  std::vector<Poly> polys_;
  std::vector<int> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
  bool unit_ = false;

  std::vector<const Poly*> active_view() const {
    std::vector<const Poly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    // Smallest leading monomial first.
    const Ring& r = *ring_;
    std::sort(out.begin(), out.end(), [&r](const Poly* a, const Poly* b) { return r.less(a->lm(), b->lm()); });
    return out;
  }

  std::vector<Poly> active_polys() const {
    std::vector<Poly> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

  bool better(const Pair& a, const Pair& b) const {
    // Normal strategy, sugar only breaks ties.  Selecting by sugar first made
    // intermediate coefficients explode on the singular-scheme systems.
    int c = ring_->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  int pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    int si = sugar_[i] + l.deg - polys_[i].lm().deg;
    int sj = sugar_[j] + l.deg - polys_[j].lm().deg;
    return std::max(si, sj);
  }

  // Gebauer-Moeller installation of the new element h.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lm();
    std::vector<std::size_t> cand;
    for (std::size_t g = 0; g < h; ++g)
      if (active_[g]) cand.push_back(g);
    stats_.pairs_considered += cand.size();

    std::vector<std::size_t> kept;
    std::vector<bool> alive(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      const Monomial& la = polys_[cand[a]].lm();
      Monomial lha = lcm(lh, la);
      bool keep = coprime(lh, la);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b)
          if (alive[b] && lcm(lh, polys_[cand[b]].lm()).divides(lha)) keep = false;
        for (std::size_t b : kept)
          if (keep && lcm(lh, polys_[b].lm()).divides(lha)) keep = false;
      }
      alive[a] = false;
      if (keep) kept.push_back(cand[a]);
    }

    std::vector<Pair> next;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lcm(polys_[p.i].lm(), lh) != p.lcm && lcm(polys_[p.j].lm(), lh) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (std::size_t g : kept) {
      if (coprime(lh, polys_[g].lm())) continue;
      Monomial l = lcm(lh, polys_[g].lm());
      next.push_back({g, h, l, pair_sugar(g, h, l)});
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g)
      if (active_[g] && lh.divides(polys_[g].lm())) active_[g] = false;
  }
};

}  // namespace

GroebnerBasis buchberger(std::span<const Poly> gens, RingPtr ring) {
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!ring) ring = g.ring();
    if (g.ring() != ring) throw RingMismatch("buchberger: generators live in different rings");
  }
  if (!ring) throw std::invalid_argument("buchberger: ring unknown for an all-zero input");
  std::vector<Poly> original(gens.begin(), gens.end());
  std::vector<Poly> sorted;
  for (const auto& g : gens)
    if (!g.is_zero()) sorted.push_back(g);
  // Lower leading monomials first keeps the initial reductions cheap.
  const Ring& r = *ring;
  std::stable_sort(sorted.begin(), sorted.end(), [&r](const Poly& a, const Poly& b) { return r.less(a.lm(), b.lm()); });
  Buchberger bb(ring);
  for (auto& g : sorted)
    if (!bb.insert(g, g.total_degree())) break;
  bb.run();
  return bb.finish(std::move(original));
}

GroebnerBasis buchberger(std::span<const Poly> gens, MonOrder order) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  RingPtr ring = gens.front().ring()->with_order(order);
  std::vector<Poly> moved;
  for (const auto& g : gens) moved.push_back(g.in_ring(ring));
  return buchberger(moved, ring);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  const auto& b = g.polys();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!reduce(s_polynomial(b[i], b[j]), b).is_zero()) return false;
  return true;
}

GroebnerBasis elimination_ideal(std::span<const Poly> gens, int k) {
  if (gens.empty()) throw std::invalid_argument("elimination_ideal: no generators");
  const RingPtr& src = gens.front().ring();
  const int n = src->nvars();
  if (k < 0 || k > n) throw std::invalid_argument("elimination_ideal: bad block size");
  GroebnerBasis full = buchberger(gens, MonOrder::elim(k));
  std::vector<std::string> names(src->names().begin() + k, src->names().end());
  RingPtr target = Ring::make(names);
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  for (int i = k; i < n; ++i) map[static_cast<std::size_t>(i)] = i - k;
  std::vector<Poly> kept;
  for (const auto& p : full.polys()) {
    bool free = true;
    for (const auto& t : p.terms())
      for (int i = 0; i < k && free; ++i)
        if (t.mon.exp[static_cast<std::size_t>(i)]) free = false;
    if (free) kept.push_back(remap(p, target, map));
  }
  GroebnerBasis out = buchberger(kept, target);
  return GroebnerBasis(target, out.polys(), std::vector<Poly>(gens.begin(), gens.end()), full.stats());
}

bool ideal_equality(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.ring() != b.ring()) throw RingMismatch("ideal_equality: different rings or orders");
  return a.polys() == b.polys();
}

int QuotientBasis::index_of(const Monomial& m) const {
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (monomials[i] == m) return static_cast<int>(i);
  return -1;
}

QuotientBasis quotient_basis(const GroebnerBasis& g) {
  QuotientBasis qb;
  if (g.is_unit()) {
    qb.finite = true;
    return qb;
  }
  const int n = g.ring()->nvars();
  for (int i = 0; i < n; ++i) {
    bool pure = false;
    for (const auto& p : g.polys())
      if (p.lm().deg == p.lm().exp[static_cast<std::size_t>(i)] && p.lm().deg > 0) pure = true;
    if (!pure) return qb;
  }
  qb.finite = true;
  auto standard = [&](const Monomial& m) {
    for (const auto& p : g.polys())
      if (p.lm().divides(m)) return false;
    return true;
  };
  std::set<std::array<std::uint8_t, kMaxVars>> seen;
  std::vector<Monomial> queue{Monomial::one()};
  seen.insert(Monomial::one().exp);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Monomial m = queue[head];
    qb.monomials.push_back(m);
    for (int i = 0; i < n; ++i) {
      Monomial next = m * Monomial::var(i);
      if (seen.count(next.exp) || !standard(next)) continue;
      seen.insert(next.exp);
      queue.push_back(next);
    }
  }
  const Ring& r = *g.ring();
  std::sort(qb.monomials.begin(), qb.monomials.end(), [&r](const Monomial& a, const Monomial& b) { return r.less(a, b); });
  return qb;
}

std::optional<std::size_t> quotient_dim(const GroebnerBasis& g) {
  QuotientBasis qb = quotient_basis(g);
  if (!qb.finite) return std::nullopt;
  return qb.size();
}

CycMatrix multiplication_matrix(const GroebnerBasis& g, const QuotientBasis& b, int var) {
  if (!b.finite) throw std::invalid_argument("multiplication_matrix: quotient is infinite-dimensional");
  std::map<std::array<std::uint8_t, kMaxVars>, std::size_t> index;
  for (std::size_t i = 0; i < b.size(); ++i) index[b.monomials[i].exp] = i;
  CycMatrix m(b.size(), b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    Poly x = Poly::monomial(g.ring(), b.monomials[j] * Monomial::var(var));
    Poly nf = normal_form(x, g);
    for (const auto& t : nf.terms()) {
      auto it = index.find(t.mon.exp);
      if (it == index.end()) throw std::logic_error("multiplication_matrix: normal form leaves the quotient basis");
      m(it->second, j) = t.coeff;
    }
  }
  return m;
}

namespace {

using IntPoly = std::vector<long long>;  // coefficients of t^0, t^1, ...

IntPoly sub(IntPoly a, const IntPoly& b, int shift) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] -= b[i];
  return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

// Numerator of the Hilbert series of S / (gens).
IntPoly hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    IntPoly r{1};
    for (const auto& g : gens) r = sub(r, r, g.deg);
    return r;
  }
  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = g.exp[static_cast<std::size_t>(i)] - pivot.exp[static_cast<std::size_t>(i)];
      q.exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e > 0 ? e : 0);
      d += q.exp[static_cast<std::size_t>(i)];
    }
    q.deg = static_cast<std::uint16_t>(d);
    colon.push_back(q);
  }
  return sub(hilbert_numerator(gens), hilbert_numerator(colon), pivot.deg);
}

DimensionDegree from_leading(const std::vector<Monomial>& lms, int nvars) {
  for (const auto& m : lms)
    if (m.deg == 0) return {};
  IntPoly h = hilbert_numerator(lms);
  int k = 0;
  // Divide by (1 - t) while t = 1 is a root.
  for (;;) {
    long long at_one = 0;
    for (auto c : h) at_one += c;
    if (at_one != 0 || h.size() <= 1) break;
    IntPoly q(h.size() - 1, 0);
    long long carry = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      carry += h[i];
      q[i] = carry;
    }
    h = std::move(q);
    ++k;
  }
  long long deg = 0;
  for (auto c : h) deg += c;
  return {nvars - k - 1, deg};
}

}  // namespace

DimensionDegree projective_dimension_degree(const GroebnerBasis& g) {
  std::vector<Monomial> lms;
  for (const auto& p : g.polys()) lms.push_back(p.lm());
  return from_leading(lms, g.ring()->nvars());
}

DimensionDegree projective_dimension_degree(std::span<const Poly> gens) {
  for (const auto& p : gens)
    if (!p.is_homogeneous()) throw std::invalid_argument("projective_dimension_degree: non-homogeneous generator");
  return projective_dimension_degree(buchberger(gens));
}

}  // namespace dp6
