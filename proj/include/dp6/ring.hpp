#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace dp6 {

inline constexpr int kMaxVars = 16;

/// Exponent vector.  Only the first Ring::nvars() slots are used; the rest stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(a.exp[i] + b.exp[i]);
    r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    return r;
  }
  /// a / b, only valid when b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
    r.deg = static_cast<std::uint16_t>(a.deg - b.deg);
    return r;
  }
  bool divides(const Monomial& other) const {
    if (deg > other.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
      d += r.exp[i];
    }
    r.deg = static_cast<std::uint16_t>(d);
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.exp[i] != 0 && b.exp[i] != 0) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

enum class OrderKind { Lex, Grevlex, BlockElim };

/// Monomial order.  BlockElim(k) is grevlex on the first k variables, ties
/// broken by grevlex on the rest; it eliminates the first k variables.
struct MonOrder {
  OrderKind kind = OrderKind::Grevlex;
  int block = 0;

  static MonOrder lex() { return {OrderKind::Lex, 0}; }
  static MonOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonOrder elim(int k) { return {OrderKind::BlockElim, k}; }
  friend bool operator==(const MonOrder& a, const MonOrder& b) {
    return a.kind == b.kind && a.block == b.block;
  }
  std::string str() const;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring over Q(zeta_12) with named variables and a monomial order.
/// Rings are interned: two calls with the same names and order return the
/// same object, so pointer equality is ring equality.
class Ring {
 public:
  static RingPtr make(std::vector<std::string> names, MonOrder order = MonOrder::grevlex());

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const MonOrder& order() const { return order_; }
  /// -1 when absent.
  int index_of(const std::string& name) const;

  RingPtr with_order(MonOrder order) const { return make(names_, order); }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string str() const;

  Ring(std::vector<std::string> names, MonOrder order)
      : names_(std::move(names)), order_(order) {}

 private:
  std::vector<std::string> names_;
  MonOrder order_;
};

/// Centrally registered rings.
namespace rings {
RingPtr v();                 ///< v0..v5, coordinates of P^5
RingPtr chart(int i);        ///< affine chart v_i = 1 of P^5, variables y_j (j != i)
RingPtr u6();                ///< u0..u6, coordinates of P^6
RingPtr x();                 ///< x0..x2, coordinates of P^2
RingPtr l();                 ///< l0..l4, coordinates of P^4
RingPtr u8();                ///< u0..u8, coordinates of P^8
RingPtr numbered(const std::string& prefix, int n, int first = 0);
/// Affine chart of an arbitrary ring: drop variable i.
RingPtr chart_of(const RingPtr& ring, int i);
}  // namespace rings

}  // namespace dp6
