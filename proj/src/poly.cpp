#include "dp6/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>

namespace dp6 {

Poly Poly::constant(RingPtr ring, const CycElem& c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(), c});
  return p;
}

Poly Poly::variable(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw std::out_of_range("variable index");
  Poly p(std::move(ring));
  p.terms_.push_back({Monomial::var(i), CycElem(1)});
  return p;
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const CycElem& c) {
  Poly p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mon, b.mon) > 0; });
  Poly p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
#ifndef NDEBUG
  for (std::size_t i = 1; i < p.terms_.size(); ++i)
    assert(p.ring_->compare(p.terms_[i - 1].mon, p.terms_[i].mon) > 0);
#endif
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.mon.deg);
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mon.deg != terms_.front().mon.deg) return false;
  return true;
}

CycElem Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mon == m) return t.coeff;
  return CycElem(0);
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mon, -t.coeff});
  return r;
}

namespace {

// Merge of two canonical term lists: a + sign * b.
std::vector<Term> merge(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.compare(a[i].mon, b[j].mon);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mon, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      CycElem s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mon, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mon, subtract ? -b[j].coeff : b[j].coeff});
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  check_ring(o);
  terms_ = merge(*ring_, terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  check_ring(o);
  terms_ = merge(*ring_, terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mon * t.mon, s.coeff * t.coeff});
  return Poly::from_terms(a.ring_, std::move(prod));
}

Poly operator*(const CycElem& c, const Poly& p) {
  Poly r(p.ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(p.terms_.size());
  for (const auto& t : p.terms_) r.terms_.push_back({t.mon, c * t.coeff});
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mon != b.terms_[i].mon || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Poly Poly::mul_term(const Monomial& m, const CycElem& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mon * m, c * t.coeff});
  return r;
}

Poly Poly::sub_mul(const Monomial& m, const CycElem& c, const Poly& g) const {
  check_ring(g);
  const Ring& ring = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    Monomial gm = g.terms_[j].mon * m;
    int cmp = ring.compare(terms_[i].mon, gm);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, -(c * g.terms_[j].coeff)});
      ++j;
    } else {
      CycElem s = terms_[i].coeff - c * g.terms_[j].coeff;
      if (!s.is_zero()) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) out.push_back({g.terms_[j].mon * m, -(c * g.terms_[j].coeff)});
  return from_sorted(ring_, std::move(out));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  Poly r = constant(ring_, CycElem(1)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return lc().inverse() * *this;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  mpz_class den = 1, num = 0;
  for (const auto& t : terms_)
    for (const auto& c : t.coeff.coeffs())
      if (sgn(c) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& t : terms_)
    for (const auto& c : t.coeff.coeffs())
      if (sgn(c) != 0) {
        mpz_class v = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
      }
  Rational scale(den, num);
  scale.canonicalize();
  if (scale == 1) return *this;
  return CycElem(scale) * *this;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= ring_->nvars()) throw std::out_of_range("derivative variable");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mon.exp[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Monomial m = t.mon;
    m.exp[static_cast<std::size_t>(var)] -= 1;
    m.deg -= 1;
    out.push_back({m, CycElem(e) * t.coeff});
  }
  // Monomial orders are multiplicative, so dividing every surviving term by
  // the same variable keeps them sorted.
  return from_sorted(ring_, std::move(out));
}

namespace {

template <typename T>
T power(const T& x, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

CycElem Poly::evaluate(std::span<const CycElem> point) const {
  if (static_cast<int>(point.size()) != ring_->nvars())
    throw std::invalid_argument("point has wrong length");
  const int n = ring_->nvars();
  // Small power cache per variable.
  std::vector<std::vector<CycElem>> pw(static_cast<std::size_t>(n));
  CycElem sum;
  for (const auto& t : terms_) {
    CycElem v = t.coeff;
    for (int i = 0; i < n && !v.is_zero(); ++i) {
      int e = t.mon.exp[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      auto& cache = pw[static_cast<std::size_t>(i)];
      if (cache.empty()) cache.push_back(CycElem(1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[static_cast<std::size_t>(i)]);
      v *= cache[static_cast<std::size_t>(e)];
    }
    sum += v;
  }
  return sum;
}

Complex Poly::evaluate(std::span<const Complex> point) const {
  if (static_cast<int>(point.size()) != ring_->nvars())
    throw std::invalid_argument("point has wrong length");
  const int n = ring_->nvars();
  Complex sum = 0;
  for (const auto& t : terms_) {
    Complex v = t.coeff.embed();
    for (int i = 0; i < n; ++i) {
      int e = t.mon.exp[static_cast<std::size_t>(i)];
      if (e) v *= power(point[static_cast<std::size_t>(i)], e);
    }
    sum += v;
  }
  return sum;
}

Poly Poly::in_ring(const RingPtr& target) const {
  if (target->names() != ring_->names()) throw RingMismatch("in_ring: variable names differ");
  if (target == ring_) return *this;
  return from_terms(target, terms_);
}

double Poly::norm1() const {
  double s = 0;
  for (const auto& t : terms_) s += std::abs(t.coeff.embed());
  return s;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    CycElem c = t.coeff;
    bool neg = c.is_rational() && c.sign_of_rational() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = c.is_one();
    if (!unit || t.mon.deg == 0) {
      os << c.str();
      if (t.mon.deg) os << '*';
    }
    bool firstv = true;
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = t.mon.exp[static_cast<std::size_t>(i)];
      if (!e) continue;
      if (!firstv) os << '*';
      firstv = false;
      os << ring_->name(i);
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

Poly compose(const Poly& f, std::span<const Poly> images, const RingPtr& target) {
  const int n = f.ring()->nvars();
  if (static_cast<int>(images.size()) != n) throw std::invalid_argument("compose: wrong number of images");
  std::vector<std::vector<Poly>> pw(static_cast<std::size_t>(n));
  std::vector<Term> acc;
  Poly sum(target);
  for (const auto& t : f.terms()) {
    Poly v = Poly::constant(target, t.coeff);
    for (int i = 0; i < n; ++i) {
      int e = t.mon.exp[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      auto& cache = pw[static_cast<std::size_t>(i)];
      if (cache.empty()) cache.push_back(Poly::constant(target, CycElem(1)));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[static_cast<std::size_t>(i)]);
      v = v * cache[static_cast<std::size_t>(e)];
    }
    for (auto& term : v.terms()) acc.push_back(term);
  }
  return Poly::from_terms(target, std::move(acc));
}

Poly substitute_linear(const Poly& f, const CycMatrix& m) {
  const auto& ring = f.ring();
  const int n = ring->nvars();
  if (static_cast<int>(m.rows()) != n || static_cast<int>(m.cols()) != n)
    throw std::invalid_argument("substitute_linear: matrix size");
  if (determinant(m).is_zero()) throw FieldError("substitute_linear: singular matrix");
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    std::vector<Term> ts;
    for (int j = 0; j < n; ++j)
      if (!m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero())
        ts.push_back({Monomial::var(j), m(static_cast<std::size_t>(i), static_cast<std::size_t>(j))});
    images.push_back(Poly::from_terms(ring, std::move(ts)));
  }
  return compose(f, images, ring);
}

Poly dehomogenize(const Poly& f, int chart) {
  if (!f.is_homogeneous()) throw std::invalid_argument("dehomogenize: input is not homogeneous");
  const auto& src = f.ring();
  RingPtr dst = rings::chart_of(src, chart);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Monomial m;
    int k = 0;
    for (int i = 0; i < src->nvars(); ++i) {
      if (i == chart) continue;
      m.exp[static_cast<std::size_t>(k++)] = t.mon.exp[static_cast<std::size_t>(i)];
    }
    m.deg = static_cast<std::uint16_t>(t.mon.deg - t.mon.exp[static_cast<std::size_t>(chart)]);
    out.push_back({m, t.coeff});
  }
  return Poly::from_terms(dst, std::move(out));
}

Poly homogenize(const Poly& f, int chart, const RingPtr& projective_ring, int degree) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mon.deg > degree) throw std::invalid_argument("homogenize: degree too small");
    Monomial m;
    int k = 0;
    for (int i = 0; i < projective_ring->nvars(); ++i) {
      if (i == chart) continue;
      m.exp[static_cast<std::size_t>(i)] = t.mon.exp[static_cast<std::size_t>(k++)];
    }
    m.exp[static_cast<std::size_t>(chart)] = static_cast<std::uint8_t>(degree - t.mon.deg);
    m.deg = static_cast<std::uint16_t>(degree);
    out.push_back({m, t.coeff});
  }
  return Poly::from_terms(projective_ring, std::move(out));
}

Poly remap(const Poly& f, const RingPtr& target, std::span<const int> var_map) {
  if (static_cast<int>(var_map.size()) != f.ring()->nvars()) throw std::invalid_argument("remap: map size");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    m.deg = t.mon.deg;
    for (int i = 0; i < f.ring()->nvars(); ++i) {
      auto e = t.mon.exp[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      int j = var_map[static_cast<std::size_t>(i)];
      if (j < 0) throw std::invalid_argument("remap: dropped variable occurs");
      m.exp[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(m.exp[static_cast<std::size_t>(j)] + e);
    }
    out.push_back({m, t.coeff});
  }
  return Poly::from_terms(target, std::move(out));
}

std::vector<std::vector<Poly>> jacobian_matrix(std::span<const Poly> fs) {
  std::vector<std::vector<Poly>> j;
  for (const auto& f : fs) {
    if (f.ring() != fs.front().ring()) throw RingMismatch("jacobian_matrix: mixed rings");
    std::vector<Poly> row;
    for (int k = 0; k < f.ring()->nvars(); ++k) row.push_back(f.derivative(k));
    j.push_back(std::move(row));
  }
  return j;
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty determinant");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Poly det(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    Poly term = m[0][c] * poly_determinant(sub);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

namespace {

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Poly> minors(const std::vector<std::vector<Poly>>& m, int k) {
  std::vector<std::vector<int>> rs, cs;
  std::vector<int> cur;
  subsets(static_cast<int>(m.size()), k, 0, cur, rs);
  subsets(static_cast<int>(m.front().size()), k, 0, cur, cs);
  std::vector<Poly> out;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<Poly>> sub;
      for (int i : r) {
        std::vector<Poly> row;
        for (int j : c) row.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        sub.push_back(std::move(row));
      }
      out.push_back(poly_determinant(sub));
    }
  return out;
}

}  // namespace dp6
