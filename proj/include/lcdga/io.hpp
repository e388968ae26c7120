// Expression parsing for test vectors and canonical JSON serialization.
// Polynomials print and parse in a plain arithmetic syntax:
//   "s9/s11 - s9*s12*s13/(s11^2*s15)"
// where names present in the ring are (invertible) variables and other
// names are noncommuting generators. Division is by signed monomials only.

#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "lcdga/ncpoly.hpp"
#include "lcdga/ring.hpp"

namespace lcdga {

namespace parse_detail {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  explicit Lexer(const std::string& str) : s(str) {}
  void skip() {
    while (i < s.size() && isspace((unsigned char)s[i])) ++i;
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char next() {
    skip();
    return i < s.size() ? s[i++] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip();
    size_t j = i;
    while (j < s.size() && (isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
    std::string r = s.substr(i, j - i);
    i = j;
    return r;
  }
  Int number() {
    skip();
    size_t j = i;
    while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
    Int r(s.substr(i, j - i));
    i = j;
    return r;
  }
  int integer() {
    int sign = 1;
    if (eat('-')) sign = -1;
    return sign * static_cast<int>(number().get_si());
  }
};

class NCParser {
 public:
  NCParser(const std::string& s, Ring& ring, bool allow_gens)
      : lex_(s), ring_(ring), allow_gens_(allow_gens) {}

  NCPoly expr() {
    NCPoly r = term(lex_.eat('-') ? -1 : 1);
    for (;;) {
      if (lex_.eat('+'))
        r += term(1);
      else if (lex_.eat('-'))
        r += term(-1);
      else
        break;
    }
    return r;
  }
  bool at_end() {
    lex_.skip();
    return lex_.i >= lex_.s.size();
  }

 private:
  NCPoly term(int sign) {
    NCPoly r = NCPoly::scalar(Laurent::constant(sign));
    r *= factor();
    for (;;) {
      char c = lex_.peek();
      if (c == '*') {
        lex_.next();
        r *= factor();
      } else if (c == '/') {
        lex_.next();
        NCPoly d = factor();
        if (!d.is_scalar()) throw ring_error("parse: division by nonscalar");
        r = r * d.scalar_part().inverse();
      } else if (c == '(' || isalpha((unsigned char)c) ||
                 isdigit((unsigned char)c)) {
        r *= factor();  // implicit product
      } else {
        break;
      }
    }
    return r;
  }
  NCPoly factor() {
    NCPoly base;
    char c = lex_.peek();
    if (c == '(') {
      lex_.next();
      base = expr();
      if (!lex_.eat(')')) throw ring_error("parse: expected )");
    } else if (isdigit((unsigned char)c)) {
      base = NCPoly::scalar(Laurent::constant(lex_.number()));
    } else if (isalpha((unsigned char)c)) {
      std::string name = lex_.ident();
      if (name.empty()) throw ring_error("parse: bad identifier");
      // crossings are a*/c*, everything else is a coefficient variable
      bool is_gen =
          allow_gens_ && !ring_.has(name) &&
          (name.starts_with("a") || name.starts_with("c"));
      if (is_gen) {
        base = NCPoly::gen(name);
      } else {
        base = NCPoly::scalar(Laurent::variable(
            ring_.has(name) ? ring_.idx(name)
                            : ring_.add(name, name.starts_with("t"))));
      }
    } else {
      throw ring_error("parse: unexpected character");
    }
    if (lex_.eat('^')) {
      int e = lex_.integer();
      if (e < 0) {
        if (!base.is_scalar()) throw ring_error("parse: negative gen power");
        Laurent v = base.scalar_part().inverse();
        base = NCPoly::scalar(v);
        e = -e;
      }
      NCPoly r = NCPoly::one();
      for (int j = 0; j < e; ++j) r *= base;
      base = r;
    }
    return base;
  }

  Lexer lex_;
  Ring& ring_;
  bool allow_gens_;
};

}  // namespace parse_detail

// Parse a commutative Laurent expression over the given ring; unknown names
// are added as variables.
inline Laurent parse_laurent(const std::string& s, Ring& ring) {
  parse_detail::NCParser p(s, ring, false);
  NCPoly r = p.expr();
  if (!p.at_end()) throw ring_error("parse: trailing input in '" + s + "'");
  if (!r.is_scalar()) throw ring_error("parse: expected scalar");
  return r.scalar_part();
}

// Parse a noncommutative expression; names in the ring are coefficients,
// everything else is a generator.
inline NCPoly parse_nc(const std::string& s, Ring& ring) {
  parse_detail::NCParser p(s, ring, true);
  NCPoly r = p.expr();
  if (!p.at_end()) throw ring_error("parse: trailing input in '" + s + "'");
  return r;
}

// ---- printing -------------------------------------------------------------

inline std::string to_string(const Ring& ring, const Laurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    Int a = c;
    if (a < 0) {
      os << (first ? "-" : " - ");
      a = -a;
    } else if (!first) {
      os << " + ";
    }
    bool printed = false;
    if (a != 1 || m.is_one()) {
      os << a.get_str();
      printed = true;
    }
    for (size_t v = 0; v < m.e.size(); ++v) {
      if (m.e[v] == 0) continue;
      if (printed) os << "*";
      os << ring.names[v];
      if (m.e[v] != 1) os << "^" << m.e[v];
      printed = true;
    }
    first = false;
  }
  return os.str();
}

inline std::string to_string(const Ring& ring, const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms) {
    std::string coeff = to_string(ring, c);
    bool neg = !coeff.empty() && coeff[0] == '-';
    if (neg) coeff = coeff.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    bool needs_parens = c.terms.size() > 1;
    bool coeff_is_one = (c.is_one() || (-c).is_one());
    if (!coeff_is_one || w.empty()) {
      if (needs_parens) os << "(";
      os << coeff;
      if (needs_parens) os << ")";
      if (!w.empty()) os << "*";
    }
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) os << "*";
      os << gen_name(w[i]);
    }
    first = false;
  }
  return os.str();
}

// Canonical JSON for polynomials:
// {"terms":[{"coeff":"<decimal>","mono":{"var":exp,...},"word":["a9",...]}]}
inline std::string json_string(const Ring& ring, const NCPoly& p) {
  std::ostringstream os;
  os << "{\"terms\":[";
  bool first_w = true;
  for (const auto& [w, c] : p.terms) {
    for (const auto& [m, coef] : c.terms) {
      if (!first_w) os << ",";
      first_w = false;
      os << "{\"coeff\":\"" << coef.get_str() << "\",\"mono\":{";
      bool fm = true;
      for (size_t v = 0; v < m.e.size(); ++v) {
        if (m.e[v] == 0) continue;
        if (!fm) os << ",";
        fm = false;
        os << "\"" << ring.names[v] << "\":" << m.e[v];
      }
      os << "},\"word\":[";
      for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << "\"" << gen_name(w[i]) << "\"";
      }
      os << "]}";
    }
  }
  os << "]}";
  return os.str();
}

inline std::string json_string(const Ring& ring, const Laurent& p) {
  return json_string(ring, NCPoly::scalar(p));
}

}  // namespace lcdga
