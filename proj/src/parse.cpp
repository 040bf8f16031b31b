#include "dp6/parse.hpp"

#include <cctype>
#include <map>

namespace dp6 {

namespace {

class Parser {
 public:
  Parser(std::string_view s, RingPtr ring, const std::map<std::string, Poly>* names)
      : s_(s), ring_(std::move(ring)), names_(names) {}

  Poly parse_all() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  const std::map<std::string, Poly>* names_;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  static bool starts_atom(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = d.lc().inverse() * acc;
      } else if (starts_atom(c)) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return base.pow(e);
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class n(std::string(s_.substr(start, pos_ - start)));
      return Poly::constant(ring_, CycElem(Rational(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      int idx = ring_ ? ring_->index_of(id) : -1;
      if (idx >= 0) return Poly::variable(ring_, idx);
      if (names_) {
        auto it = names_->find(id);
        if (it != names_->end()) return it->second;
      }
      if (id == "z" || id == "zeta12") return Poly::constant(ring_, CycElem::zeta12());
      if (id == "zeta6") return Poly::constant(ring_, CycElem::zeta6());
      if (id == "zeta3") return Poly::constant(ring_, CycElem::zeta3());
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected token");
  }
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring, nullptr).parse_all();
}

CycElem parse_coeff(std::string_view text) {
  Poly p = Parser(text, Ring::make({}), nullptr).parse_all();
  return p.is_zero() ? CycElem(0) : p.lc();
}

std::vector<std::pair<std::string, Poly>> parse_definitions(std::string_view text, const RingPtr& ring) {
  struct Pending {
    std::string name, body;
    std::size_t offset;
  };
  std::vector<Pending> defs;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t nl = text.find('\n', offset);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(offset, nl - offset);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t def = line.find(":=");
    if (def != std::string_view::npos) {
      std::string name(line.substr(0, def));
      auto blank = [](unsigned char c) { return std::isspace(c) != 0; };
      while (!name.empty() && blank(static_cast<unsigned char>(name.back()))) name.pop_back();
      while (!name.empty() && blank(static_cast<unsigned char>(name.front()))) name.erase(name.begin());
      if (name.empty()) throw ParseError("missing name", offset);
      defs.push_back({name, std::string(line.substr(def + 2)), offset});
    } else {
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) {
        // Continuation of the previous definition.
        if (defs.empty()) throw ParseError("expected 'name := poly'", offset);
        defs.back().body += ' ';
        defs.back().body += line;
      }
    }
    offset = nl + 1;
  }
  std::vector<std::pair<std::string, Poly>> out;
  std::map<std::string, Poly> known;
  for (const auto& d : defs) {
    if (known.count(d.name)) throw ParseError("duplicate definition of " + d.name, d.offset);
    try {
      Poly p = Parser(d.body, ring, &known).parse_all();
      known[d.name] = p;
      out.emplace_back(d.name, p);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " in definition of " + d.name, d.offset);
    }
  }
  return out;
}

}  // namespace dp6
