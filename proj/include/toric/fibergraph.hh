#pragma once

// Fiber graphs on monomials of a fixed degree: connected components detect
// minimal generators, indispensable monomials and indispensable binomials.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "toric/exponents.hh"
#include "toric/grobner.hh"
#include "toric/intlat.hh"
#include "toric/semigroup.hh"

namespace toric {

using Degree = std::vector<Int>;

// All u >= 0 with matrix * u = b, in lexicographic order. Requires a
// non-negative grading matrix in which every variable has a positive
// entry in some row, so each coordinate is bounded.
inline std::vector<Expo> graded_fiber(const Grading& a, const Degree& b) {
  const IntMatrix& m = a.matrix;
  if (b.size() != m.rows) throw std::invalid_argument("degree arity mismatch");
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c) < 0)
        throw std::invalid_argument("graded_fiber: negative grading entry");
  for (std::size_t c = 0; c < m.cols; ++c) {
    bool bounded = false;
    for (std::size_t r = 0; r < m.rows; ++r)
      if (m.at(r, c) > 0) bounded = true;
    if (!bounded) throw std::invalid_argument("graded_fiber: unbounded variable");
  }
  std::vector<Expo> out;
  Expo cur(m.cols, Int(0));
  Degree rem = b;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m.cols) {
      if (std::all_of(rem.begin(), rem.end(), [](const Int& x) { return x == 0; }))
        out.push_back(cur);
      return;
    }
    Int max_e(-1);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (m.at(r, i) == 0) continue;
      Int cap = rem[r] / m.at(r, i);
      if (max_e < 0 || cap < max_e) max_e = cap;
    }
    for (Int e = 0; e <= max_e; ++e) {
      cur[i] = e;
      bool ok = true;
      for (std::size_t r = 0; r < m.rows && ok; ++r) {
        rem[r] -= e * m.at(r, i);
        if (rem[r] < 0) ok = false;
      }
      if (ok) self(self, i + 1);
      for (std::size_t r = 0; r < m.rows; ++r) rem[r] += e * m.at(r, i);
    }
    cur[i] = 0;
  };
  rec(rec, 0);
  return out;
}

// Monomials of M_J in degree b: fiber members with a distinct partner
// x^u' of equal degree such that x^u - x^u' lies in J. For toric J this
// is the whole fiber when it has at least two elements, else empty.
inline std::vector<Expo> m_j_vertices(const BinomialIdeal& j, const Degree& b) {
  if (!j.grading()) throw std::invalid_argument("m_j_vertices: ideal needs a grading");
  std::vector<Expo> fib = graded_fiber(*j.grading(), b);
  if (j.is_toric()) {
    if (fib.size() < 2) return {};
    return fib;
  }
  std::vector<Expo> out;
  for (std::size_t i = 0; i < fib.size(); ++i) {
    bool in = false;
    for (std::size_t k = 0; k < fib.size() && !in; ++k) {
      if (k == i) continue;
      auto f = make_binomial(fib[i], fib[k]);
      if (f && j.contains(*f)) in = true;
    }
    if (in) out.push_back(fib[i]);
  }
  return out;
}

struct FiberGraph {
  Degree degree;
  std::vector<Expo> vertices;                      // lexicographically sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> component;              // vertex -> component id
  std::size_t component_count = 0;
  // Vertices u, v in the same class iff x^u - x^v lies in J; edges only
  // ever join vertices of a common class. For toric J there is a single
  // class.
  std::vector<std::size_t> cls;
  std::size_t class_count = 0;
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  // Component ids numbered by first occurrence.
  std::vector<std::size_t> label(std::size_t* count) {
    std::vector<std::size_t> id(parent.size());
    std::map<std::size_t, std::size_t> seen;
    for (std::size_t i = 0; i < parent.size(); ++i) {
      std::size_t r = find(i);
      auto [it, fresh] = seen.emplace(r, seen.size());
      id[i] = it->second;
    }
    *count = seen.size();
    return id;
  }
};

}  // namespace detail

// The graph G_b(J): edge between u and v iff gcd(x^u, x^v) != 1 and some
// variable x_k dividing the gcd has x^{u - e_k} - x^{v - e_k} in J. A
// single-variable witness suffices: any witness x^w can be multiplied by
// x^{w - e_k} to yield one.
inline FiberGraph fiber_graph(const BinomialIdeal& j, const Degree& b) {
  FiberGraph g;
  g.degree = b;
  g.vertices = m_j_vertices(j, b);
  std::size_t n = g.vertices.size();
  detail::UnionFind comp(n);
  detail::UnionFind classes(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const Expo& u = g.vertices[x];
      const Expo& v = g.vertices[y];
      auto whole = make_binomial(u, v);
      bool same_class = whole && j.contains(*whole);
      if (same_class) classes.unite(x, y);
      if (!same_class) continue;  // an edge witness would put u, v in one class
      Expo gcd = monomial_gcd(u, v);
      bool edge = false;
      for (std::size_t k : support(gcd)) {
        Expo uu = u, vv = v;
        uu[k] -= 1;
        vv[k] -= 1;
        auto f = make_binomial(std::move(uu), std::move(vv));
        if (!f || j.contains(*f)) {
          edge = true;
          break;
        }
      }
      if (edge) {
        g.edges.emplace_back(x, y);
        comp.unite(x, y);
      }
    }
  }
  g.component = comp.label(&g.component_count);
  g.cls = classes.label(&g.class_count);
  return g;
}

inline std::size_t find_vertex(const FiberGraph& g, const Expo& u) {
  auto it = std::find(g.vertices.begin(), g.vertices.end(), u);
  if (it == g.vertices.end())
    throw std::invalid_argument("monomial is not a vertex of the fiber graph");
  return static_cast<std::size_t>(it - g.vertices.begin());
}

inline Degree degree_of(const BinomialIdeal& j, const Expo& u) {
  if (!j.grading()) throw std::invalid_argument("ideal needs a grading");
  return j.grading()->degree(u);
}

// Th. criterion: f is a minimal generator iff its monomials lie in two
// different connected components of the fiber graph of its degree.
inline bool is_minimal_generator(const BinomialIdeal& i, const Binomial& f) {
  if (!i.contains(f)) throw std::invalid_argument("binomial not in the ideal");
  FiberGraph g = fiber_graph(i, degree_of(i, f.lhs));
  return g.component[find_vertex(g, f.lhs)] != g.component[find_vertex(g, f.rhs)];
}

// x^u is indispensable iff {x^u} is a connected component of G_b(J).
inline bool indispensable_monomial(const BinomialIdeal& j, const Expo& u) {
  FiberGraph g = fiber_graph(j, degree_of(j, u));
  std::size_t x = find_vertex(g, u);
  for (std::size_t y = 0; y < g.vertices.size(); ++y)
    if (y != x && g.component[y] == g.component[x]) return false;
  return true;
}

enum class Tristate { yes, no, unknown };

// Two singleton components certify indispensability. The test is exact
// for toric ideals; for general pure difference ideals the converse can
// fail, so the negative answer is reported as unknown.
inline Tristate indispensable_binomial(const BinomialIdeal& j, const Binomial& f) {
  if (!j.contains(f)) throw std::invalid_argument("binomial not in the ideal");
  FiberGraph g = fiber_graph(j, degree_of(j, f.lhs));
  bool two_singletons = g.vertices.size() == 2 && g.component_count == 2;
  if (two_singletons) {
    // The two vertices must be the monomials of f itself.
    bool match = (g.vertices[0] == f.lhs && g.vertices[1] == f.rhs) ||
                 (g.vertices[0] == f.rhs && g.vertices[1] == f.lhs);
    if (match) return Tristate::yes;
  }
  return j.is_toric() ? Tristate::no : Tristate::unknown;
}

struct BettiEntry {
  Degree degree;
  std::size_t components = 0;
  std::size_t classes = 0;
  std::vector<Binomial> generators;  // components - classes of them
};

struct BettiTable {
  std::vector<BettiEntry> entries;  // sorted by degree, only non-trivial ones

  std::size_t mu() const {
    std::size_t m = 0;
    for (const BettiEntry& e : entries) m += e.generators.size();
    return m;
  }
};

// Minimal homogeneous generating set read off the fiber graphs. Candidate
// degrees are those of the supplied generators; by graded Nakayama they
// majorize the Betti degrees. In each degree a spanning forest over the
// components of every class is emitted: each component's lexicographically
// least vertex is joined to the least vertex of the class's least
// component, contributing (components - classes) generators.
inline BettiTable minimal_generating_set(const BinomialIdeal& j) {
  if (!j.grading()) throw std::invalid_argument("ideal needs a grading");
  std::vector<Degree> degrees;
  for (const Binomial& f : j.generators()) degrees.push_back(degree_of(j, f.lhs));
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  BettiTable out;
  for (const Degree& b : degrees) {
    FiberGraph g = fiber_graph(j, b);
    if (g.component_count <= g.class_count) continue;
    BettiEntry e;
    e.degree = b;
    e.components = g.component_count;
    e.classes = g.class_count;
    // Lex-least vertex of each component; vertices are lex-sorted so the
    // first vertex seen per component is its least.
    std::vector<std::optional<std::size_t>> least(g.component_count);
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      if (!least[g.component[v]]) least[g.component[v]] = v;
    // Per class, the root is the least vertex of the least component.
    std::vector<std::optional<std::size_t>> root(g.class_count);
    for (std::size_t c = 0; c < g.component_count; ++c) {
      std::size_t v = *least[c];
      auto& r = root[g.cls[v]];
      if (!r) r = v;
    }
    for (std::size_t c = 0; c < g.component_count; ++c) {
      std::size_t v = *least[c];
      std::size_t r = *root[g.cls[v]];
      if (v == r) continue;
      auto f = make_binomial(g.vertices[v], g.vertices[r]);
      e.generators.push_back(std::move(*f));
    }
    std::sort(e.generators.begin(), e.generators.end());
    if (!e.generators.empty()) out.entries.push_back(std::move(e));
  }
  return out;
}

// Exact uniqueness for toric ideals: every Betti degree's graph must be
// exactly two singleton components.
inline bool unique_minimal_system(const BinomialIdeal& i) {
  if (!i.is_toric())
    throw std::invalid_argument("unique_minimal_system: exact test needs a toric ideal");
  BettiTable t = minimal_generating_set(i);
  for (const BettiEntry& e : t.entries) {
    FiberGraph g = fiber_graph(i, e.degree);
    if (g.vertices.size() != 2 || g.component_count != 2) return false;
  }
  return true;
}

}  // namespace toric
