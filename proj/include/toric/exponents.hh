#pragma once

// Monomial/binomial algebra over exponent vectors, term orders and the
// text grammar used by the ideal file format and the CLI.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;

// A monomial x^u, exponents are non-negative arbitrary-precision integers.
using Expo = std::vector<Int>;

inline void check_same_length(const Expo& u, const Expo& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("exponent vectors of different length");
}

inline Int total_degree(const Expo& u) {
  Int d = 0;
  for (const Int& e : u) d += e;
  return d;
}

inline bool is_zero_vector(const Expo& u) {
  return std::all_of(u.begin(), u.end(), [](const Int& e) { return e == 0; });
}

inline std::vector<std::size_t> support(const Expo& u) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) s.push_back(i);
  return s;
}

inline Expo monomial_gcd(const Expo& u, const Expo& v) {
  check_same_length(u, v);
  Expo g(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) g[i] = std::min(u[i], v[i]);
  return g;
}

inline Expo monomial_mul(const Expo& u, const Expo& v) {
  check_same_length(u, v);
  Expo w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

inline bool monomial_divides(const Expo& d, const Expo& u) {
  check_same_length(d, u);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (d[i] > u[i]) return false;
  return true;
}

// u / d, assuming d | u.
inline Expo monomial_quot(const Expo& u, const Expo& d) {
  check_same_length(u, d);
  Expo w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    w[i] = u[i] - d[i];
    if (w[i] < 0) throw std::invalid_argument("monomial_quot: not divisible");
  }
  return w;
}

inline int lex_cmp(const Expo& u, const Expo& v) {
  check_same_length(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
  }
  return 0;
}

inline bool lex_less(const Expo& u, const Expo& v) { return lex_cmp(u, v) < 0; }

// Global tie-break order used for canonical binomial orientation:
// total degree first, then lexicographic.
inline int canonical_cmp(const Expo& u, const Expo& v) {
  Int du = total_degree(u), dv = total_degree(v);
  if (du != dv) return du < dv ? -1 : 1;
  return lex_cmp(u, v);
}

// A pure difference binomial x^lhs - x^rhs, lhs != rhs, canonically
// oriented so lhs is the greater term under canonical_cmp.
struct Binomial {
  Expo lhs;
  Expo rhs;

  friend bool operator==(const Binomial& a, const Binomial& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
  friend bool operator<(const Binomial& a, const Binomial& b) {
    int c = canonical_cmp(a.lhs, b.lhs);
    if (c != 0) return c < 0;
    return canonical_cmp(a.rhs, b.rhs) < 0;
  }
};

// nullopt represents the zero binomial; lhs == rhs is never stored.
inline std::optional<Binomial> make_binomial(Expo u, Expo v) {
  check_same_length(u, v);
  int c = canonical_cmp(u, v);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(u, v);
  return Binomial{std::move(u), std::move(v)};
}

struct TermOrder {
  enum class Kind { grevlex, lex };
  Kind kind = Kind::grevlex;
  // Weight row for the graded comparison; empty means total degree.
  std::vector<Int> weight;
  // Permutation of variable indices; variables later in the permutation
  // are cheaper. Empty means identity.
  std::vector<std::size_t> priority;

  Int weighted_degree(const Expo& u) const {
    if (weight.empty()) return total_degree(u);
    check_same_length(u, weight);
    Int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += weight[i] * u[i];
    return d;
  }

  // -1 / 0 / +1 for u < v, u == v, u > v.
  int compare(const Expo& u, const Expo& v) const {
    check_same_length(u, v);
    std::size_t n = u.size();
    auto var = [&](std::size_t k) { return priority.empty() ? k : priority[k]; };
    if (kind == Kind::lex) {
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t i = var(k);
        if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
      }
      return 0;
    }
    Int du = weighted_degree(u), dv = weighted_degree(v);
    if (du != dv) return du < dv ? -1 : 1;
    // Reverse lexicographic: scan from the cheapest variable; the
    // monomial with the larger exponent there is the smaller one.
    for (std::size_t k = n; k-- > 0;) {
      std::size_t i = var(k);
      if (u[i] != v[i]) return u[i] > v[i] ? -1 : 1;
    }
    return 0;
  }

  bool less(const Expo& u, const Expo& v) const { return compare(u, v) < 0; }

  // Stable serialization for use as a cache key.
  std::string key() const {
    std::ostringstream os;
    os << (kind == Kind::lex ? "lex" : "grevlex") << ";w=";
    for (const Int& w : weight) os << w << ",";
    os << ";p=";
    for (std::size_t p : priority) os << p << ",";
    return os.str();
  }
};

// f and -f are the same generator; compare up to orientation.
inline bool same_binomial(const Binomial& a, const Binomial& b) {
  return (a.lhs == b.lhs && a.rhs == b.rhs) || (a.lhs == b.rhs && a.rhs == b.lhs);
}

inline TermOrder grevlex_order(std::vector<Int> weight,
                               std::vector<std::size_t> priority = {}) {
  return TermOrder{TermOrder::Kind::grevlex, std::move(weight), std::move(priority)};
}

// ---------------------------------------------------------------------------
// Text I/O. Variables are 1-based: x1..xn, and y1..yn/2 when the ambient
// ring is a Lawrence ring with an even number of variables.
// ---------------------------------------------------------------------------

inline std::string monomial_to_string(const Expo& u) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (u[i] != 1) os << "^" << u[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

inline std::string binomial_to_string(const Binomial& f) {
  return monomial_to_string(f.lhs) + " - " + monomial_to_string(f.rhs);
}

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

namespace detail {

struct BinomialParser {
  const std::string& text;
  std::size_t n;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Int parse_uint() {
    skip_ws();
    std::size_t start = pos;
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits += text[pos++];
    if (digits.empty()) throw ParseError("expected integer", start);
    return Int(digits);
  }

  // factor := ("x"|"y") index ("^" positive-int)?
  void parse_factor(Expo& acc) {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'y'))
      throw ParseError("expected variable 'x' or 'y'", pos);
    char name = text[pos++];
    Int idx = parse_uint();
    if (idx < 1) throw ParseError("variable index must be positive", start);
    std::size_t i = 0;
    if (name == 'x') {
      if (idx > n) throw ParseError("variable index out of range", start);
      i = static_cast<std::size_t>(idx) - 1;
    }
    if (name == 'y') {
      if (n % 2 != 0)
        throw ParseError("'y' variables require a Lawrence ring (even variable count)", start);
      if (idx > n / 2) throw ParseError("variable index out of range", start);
      i = n / 2 + static_cast<std::size_t>(idx) - 1;
    }
    Int e = 1;
    if (peek() == '^') {
      ++pos;
      std::size_t epos = pos;
      e = parse_uint();
      if (e <= 0) throw ParseError("exponent must be positive", epos);
    }
    acc[i] += e;
  }

  // term := factor ("*" factor)*
  Expo parse_term() {
    Expo acc(n, Int(0));
    parse_factor(acc);
    while (peek() == '*') {
      ++pos;
      parse_factor(acc);
    }
    return acc;
  }
};

}  // namespace detail

// A single monomial in the term grammar.
inline Expo parse_monomial(const std::string& text, std::size_t n) {
  detail::BinomialParser p{text, n};
  Expo u = p.parse_term();
  if (!p.eof()) throw ParseError("trailing input", p.pos);
  return u;
}

// text conforms to: term "-" term. Keeps the written term order.
inline Binomial parse_binomial_raw(const std::string& text, std::size_t n) {
  detail::BinomialParser p{text, n};
  Expo u = p.parse_term();
  if (p.peek() != '-') throw ParseError("expected '-'", p.pos);
  ++p.pos;
  Expo v = p.parse_term();
  if (!p.eof()) throw ParseError("trailing input", p.pos);
  if (u == v) throw ParseError("the two terms are equal (zero binomial)", 0);
  return Binomial{std::move(u), std::move(v)};
}

// As above, canonically oriented.
inline Binomial parse_binomial(const std::string& text, std::size_t n) {
  Binomial f = parse_binomial_raw(text, n);
  return *make_binomial(std::move(f.lhs), std::move(f.rhs));
}

// Ideal files: UTF-8, one binomial per line, '#' starts a comment, blank
// lines ignored; the first non-comment line may be "vars n".
struct IdealFile {
  std::size_t n = 0;
  std::vector<Binomial> gens;
};

inline IdealFile parse_ideal_file(const std::string& contents,
                                  std::size_t default_n = 0) {
  IdealFile out;
  out.n = default_n;
  std::istringstream in(contents);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> pending;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (blank) continue;
    if (first_content) {
      first_content = false;
      std::istringstream ls(line);
      std::string word;
      ls >> word;
      if (word == "vars") {
        long long n = -1;
        if (!(ls >> n) || n <= 0)
          throw std::runtime_error("line " + std::to_string(lineno) +
                                   ": malformed 'vars' directive");
        out.n = static_cast<std::size_t>(n);
        continue;
      }
    }
    pending.push_back(line);
  }
  if (out.n == 0) {
    // Infer the variable count from the largest index seen anywhere.
    for (const std::string& l : pending) {
      for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        if (l[i] == 'x' || l[i] == 'y') {
          std::size_t j = i + 1, v = 0;
          while (j < l.size() && std::isdigit(static_cast<unsigned char>(l[j])))
            v = v * 10 + (l[j++] - '0');
          out.n = std::max(out.n, v);
        }
      }
    }
  }
  if (out.n == 0 && !pending.empty())
    throw std::runtime_error("cannot determine variable count");
  std::size_t k = 0;
  for (const std::string& l : pending) {
    ++k;
    try {
      out.gens.push_back(parse_binomial(l, out.n));
    } catch (const ParseError& e) {
      throw std::runtime_error("binomial " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace toric
