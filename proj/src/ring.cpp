#include "dp6/ring.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dp6 {

std::string MonOrder::str() const {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::BlockElim: return "elim(" + std::to_string(block) + ")";
  }
  return "?";
}

RingPtr Ring::make(std::vector<std::string> names, MonOrder order) {
  if (names.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("too many variables");
  if (order.kind == OrderKind::BlockElim &&
      (order.block < 0 || order.block > static_cast<int>(names.size())))
    throw std::invalid_argument("bad elimination block");
  static std::mutex mu;
  static std::map<std::pair<std::vector<std::string>, std::pair<int, int>>, RingPtr> table;
  std::lock_guard lock(mu);
  auto key = std::make_pair(names, std::make_pair(static_cast<int>(order.kind), order.block));
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  auto ring = std::make_shared<const Ring>(std::move(names), order);
  table.emplace(std::move(key), ring);
  return ring;
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const int n = nvars();
  switch (order_.kind) {
    case OrderKind::Grevlex: {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int i = n - 1; i >= 0; --i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
      return 0;
    }
    case OrderKind::Lex: {
      for (int i = 0; i < n; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      return 0;
    }
    case OrderKind::BlockElim: {
      int c = grevlex_range(a, b, 0, order_.block);
      if (c != 0) return c;
      return grevlex_range(a, b, order_.block, n);
    }
  }
  return 0;
}

std::string Ring::str() const {
  std::string s = "Q(z)[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ',';
    s += names_[i];
  }
  return s + "] " + order_.str();
}

namespace rings {

RingPtr numbered(const std::string& prefix, int n, int first) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(first + i));
  return Ring::make(std::move(names));
}

RingPtr v() { return numbered("v", 6); }
RingPtr u6() { return numbered("u", 7); }
RingPtr x() { return numbered("x", 3); }
RingPtr l() { return numbered("l", 5); }
RingPtr u8() { return numbered("u", 9); }

RingPtr chart(int i) {
  if (i < 0 || i >= 6) throw std::out_of_range("chart index");
  std::vector<std::string> names;
  for (int j = 0; j < 6; ++j)
    if (j != i) names.push_back("y" + std::to_string(j));
  return Ring::make(std::move(names));
}

RingPtr chart_of(const RingPtr& ring, int i) {
  if (ring == v()) return chart(i);
  std::vector<std::string> names;
  for (int j = 0; j < ring->nvars(); ++j)
    if (j != i) names.push_back(ring->name(j) + "_");
  return Ring::make(std::move(names), ring->order());
}

}  // namespace rings

}  // namespace dp6
