#include "dp6/field.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dp6 {

namespace {

// z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
void reduce_product(const std::array<Rational, 7>& p, std::array<Rational, 4>& out) {
  out[0] = p[0] - p[4] - p[6];
  out[1] = p[1] - p[5];
  out[2] = p[2] + p[4];
  out[3] = p[3] + p[5];
}

}  // namespace

CycElem::CycElem(Rational c0, Rational c1, Rational c2, Rational c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (auto& c : c_) c.canonicalize();
}

CycElem CycElem::zeta(int k) {
  k %= 12;
  if (k < 0) k += 12;
  // z^6 = -1 so z^k = -z^(k-6)
  int sign = 1;
  if (k >= 6) {
    k -= 6;
    sign = -1;
  }
  CycElem r;
  switch (k) {
    case 0: r.c_[0] = 1; break;
    case 1: r.c_[1] = 1; break;
    case 2: r.c_[2] = 1; break;
    case 3: r.c_[3] = 1; break;
    case 4: r.c_[2] = 1; r.c_[0] = -1; break;
    case 5: r.c_[3] = 1; r.c_[1] = -1; break;
  }
  return sign < 0 ? -r : r;
}

CycElem CycElem::coerce(Subfield tag, int k) {
  switch (tag) {
    case Subfield::Q: return CycElem(k);
    case Subfield::Zeta3: return zeta(4 * k);
    case Subfield::Zeta6: return zeta(2 * k);
    case Subfield::Zeta12: return zeta(k);
  }
  throw FieldError("unknown subfield tag");
}

bool CycElem::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool CycElem::is_one() const {
  return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool CycElem::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

int CycElem::sign_of_rational() const { return sgn(c_[0]); }

CycElem CycElem::operator-() const {
  CycElem r;
  for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

CycElem& CycElem::operator+=(const CycElem& o) {
  for (int i = 0; i < 4; ++i)
    if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& o) {
  for (int i = 0; i < 4; ++i)
    if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
  return *this;
}

CycElem operator*(const CycElem& a, const CycElem& b) {
  CycElem r;
  if (a.is_rational()) {
    if (sgn(a.c_[0]) == 0) return r;
    for (int i = 0; i < 4; ++i)
      if (sgn(b.c_[i]) != 0) r.c_[i] = a.c_[0] * b.c_[i];
    return r;
  }
  if (b.is_rational()) return b * a;
  std::array<Rational, 7> p;
  Rational t;
  for (int i = 0; i < 4; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      p[i + j] += t;
    }
  }
  reduce_product(p, r.c_);
  return r;
}

CycElem& CycElem::operator*=(const CycElem& o) {
  *this = *this * o;
  return *this;
}

CycElem CycElem::inverse() const {
  if (is_zero()) throw FieldError("division by zero in Q(zeta12)");
  if (is_rational()) return CycElem(Rational(1) / c_[0]);
  // Solve a * x = 1 with the 4x4 multiplication matrix of a.
  std::array<std::array<Rational, 5>, 4> m;
  for (int j = 0; j < 4; ++j) {
    CycElem col = *this * zeta(j);
    for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
  }
  for (int i = 0; i < 4; ++i) m[i][4] = (i == 0) ? 1 : 0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && sgn(m[piv][col]) == 0) ++piv;
    if (piv == 4) throw FieldError("singular multiplication matrix");
    std::swap(m[piv], m[col]);
    Rational inv = Rational(1) / m[col][col];
    for (int k = col; k < 5; ++k) m[col][k] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return CycElem(m[0][4], m[1][4], m[2][4], m[3][4]);
}

CycElem& CycElem::operator/=(const CycElem& o) {
  *this = *this * o.inverse();
  return *this;
}

DivResult checked_div(const CycElem& a, const CycElem& b) {
  if (b.is_zero()) return {};
  return {a * b.inverse(), true};
}

CycElem CycElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycElem result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

CycElem CycElem::galois(int k) const {
  k %= 12;
  if (k < 0) k += 12;
  if (k != 1 && k != 5 && k != 7 && k != 11) throw FieldError("not a Galois exponent");
  CycElem r;
  for (int i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    r += CycElem(c_[i]) * zeta(i * k);
  }
  return r;
}

Complex zeta12_embedded() {
  const double a = std::numbers::pi / 6.0;
  return {std::cos(a), std::sin(a)};
}

Complex CycElem::embed() const {
  static const Complex z = zeta12_embedded();
  static const Complex z2 = z * z;
  static const Complex z3 = z2 * z;
  return c_[0].get_d() + c_[1].get_d() * z + c_[2].get_d() * z2 + c_[3].get_d() * z3;
}

mpz_class CycElem::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::string CycElem::str() const {
  std::ostringstream os;
  int nz = 0;
  for (const auto& c : c_) nz += sgn(c) != 0;
  if (nz == 0) return "0";
  if (is_rational()) return c_[0].get_str();
  bool first = true;
  if (nz > 1) os << '(';
  for (int i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rational a = abs(c_[i]);
    if (sgn(c_[i]) < 0) os << '-';
    else if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << 'z';
      if (i > 1) os << '^' << i;
    }
  }
  if (nz > 1) os << ')';
  return os.str();
}

bool lex_less(const CycElem& a, const CycElem& b) {
  for (int i = 0; i < 4; ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace dp6
