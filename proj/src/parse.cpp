#include <cctype>

#include "cotan/poly.hpp"

namespace cotan {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    return s.substr(start, pos - start);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

int parse_exponent(Lexer& lx) {
  if (!lx.eat('^')) return 1;
  std::string n = lx.number();
  if (n.empty()) throw invalid_input("poly parse: missing exponent");
  return std::stoi(n);
}

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  Lexer lx{text};
  std::vector<Term> terms;
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.eat('+')) {
    } else if (lx.eat('-')) {
      sign = -1;
    } else if (!first) {
      throw invalid_input("poly parse: expected '+' or '-' near position " +
                          std::to_string(lx.pos));
    }
    first = false;
    if (lx.eof()) throw invalid_input("poly parse: dangling sign");

    Scalar coef(sign);
    Monomial m = Monomial::one(ring->nvars());
    bool saw_factor = false;
    for (;;) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef = Scalar::mul(coef, Scalar::from_string(lx.number()), ring->field());
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = lx.ident();
        int idx = ring->var_index(name);
        if (idx < 0) throw invalid_input("poly parse: unknown variable '" + name + "'");
        int e = parse_exponent(lx);
        m = mono_mul(m, Monomial::var(ring->nvars(), idx, static_cast<uint16_t>(e)));
        saw_factor = true;
      } else {
        break;
      }
      if (!lx.eat('*')) break;
    }
    if (!saw_factor) throw invalid_input("poly parse: empty term");
    terms.push_back({m, coef});
  }
  return Poly::from_terms(ring, std::move(terms));
}

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  const Ring& r = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Scalar c = t.c;
    if (c.sign() < 0) {
      out += first ? "-" : " - ";
      c = Scalar::neg(c, r.field());
    } else if (!first) {
      out += " + ";
    }
    first = false;

    std::string mono;
    for (size_t i = 0; i < r.nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += r.var(i);
      if (t.m.e[i] > 1) mono += '^' + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.str() + '*' + mono;
    }
  }
  return out;
}

}  // namespace cotan
