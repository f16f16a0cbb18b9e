#pragma once

// Binomial Buchberger engine with variable saturation: generating sets of
// toric/lattice ideals, membership in pure difference binomial ideals and
// Graver bases via the Lawrence lifting.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "toric/exponents.hh"
#include "toric/intlat.hh"

namespace toric {

// Orient f so that lhs is the leading term under `order`.
inline Binomial oriented(Binomial f, const TermOrder& order) {
  if (order.compare(f.lhs, f.rhs) < 0) std::swap(f.lhs, f.rhs);
  return f;
}

namespace detail {

// Normal form assuming every element of g is already oriented. Rewrites
// either monomial of f; a rewrite by h applies h as many times in a row
// as divisibility allows, which collapses the long chains that arise
// from large exponents.
inline std::optional<Binomial> reduce_oriented(Binomial f,
                                               const std::vector<Binomial>& g,
                                               const TermOrder& order) {
  f = oriented(std::move(f), order);
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Binomial& h : g) {
      for (Expo* side : {&f.lhs, &f.rhs}) {
        if (!monomial_divides(h.lhs, *side)) continue;
        Int t(-1);
        for (std::size_t i = 0; i < h.lhs.size(); ++i) {
          if (h.lhs[i] == 0) continue;
          Int cap = (*side)[i] / h.lhs[i];
          if (t < 0 || cap < t) t = cap;
        }
        for (std::size_t i = 0; i < h.lhs.size(); ++i)
          (*side)[i] += t * (h.rhs[i] - h.lhs[i]);
        if (f.lhs == f.rhs) return std::nullopt;
        f = oriented(std::move(f), order);
        progress = true;
        break;
      }
      if (progress) break;
    }
  }
  return f;
}

}  // namespace detail

// Normal form of f with respect to G: no monomial of the result is
// divisible by a leading term of G. Pure difference binomials are closed
// under this reduction; nullopt is the zero binomial.
inline std::optional<Binomial> reduce(Binomial f, const std::vector<Binomial>& g,
                                      const TermOrder& order) {
  std::vector<Binomial> go;
  go.reserve(g.size());
  for (const Binomial& h : g) go.push_back(oriented(h, order));
  return detail::reduce_oriented(std::move(f), go, order);
}

namespace detail {

inline Expo monomial_lcm(const Expo& u, const Expo& v) {
  Expo w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::max(u[i], v[i]);
  return w;
}

inline bool coprime(const Expo& u, const Expo& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0 && v[i] != 0) return false;
  return true;
}

}  // namespace detail

// Reduced Groebner basis of the ideal generated by pure difference
// binomials; elements are canonically oriented and sorted. S-pairs are
// processed by increasing weighted degree then canonical order so runs
// are reproducible.
inline std::vector<Binomial> buchberger(std::vector<Binomial> gens,
                                        const TermOrder& order) {
  std::vector<Binomial> basis;
  for (Binomial& f : gens) {
    auto r = detail::reduce_oriented(std::move(f), basis, order);
    if (r) basis.push_back(oriented(std::move(*r), order));
  }

  struct Pair {
    Int degree;
    std::size_t i, j;
  };
  // Min-heap on (degree, i, j) so runs are reproducible.
  auto pair_greater = [](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(pair_greater)> queue(
      pair_greater);
  auto push_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (detail::coprime(basis[i].lhs, basis[k].lhs)) continue;
      Expo l = detail::monomial_lcm(basis[i].lhs, basis[k].lhs);
      queue.push({order.weighted_degree(l), i, k});
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) push_pairs(k);

  while (!queue.empty()) {
    Pair p = queue.top();
    queue.pop();
    const Binomial& fi = basis[p.i];
    const Binomial& fj = basis[p.j];
    Expo l = detail::monomial_lcm(fi.lhs, fj.lhs);
    // S-binomial of two pure difference binomials.
    Expo u = monomial_mul(monomial_quot(l, fi.lhs), fi.rhs);
    Expo v = monomial_mul(monomial_quot(l, fj.lhs), fj.rhs);
    if (u == v) continue;
    auto r = detail::reduce_oriented(Binomial{std::move(u), std::move(v)}, basis,
                                     order);
    if (r) {
      basis.push_back(oriented(std::move(*r), order));
      push_pairs(basis.size() - 1);
    }
  }

  // Interreduce: drop elements whose lead is divisible by another lead,
  // then take tails to normal form.
  std::vector<Binomial> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (monomial_divides(basis[j].lhs, basis[i].lhs)) {
        if (basis[j].lhs == basis[i].lhs && j > i) continue;  // keep first
        redundant = true;
      }
    }
    if (!redundant) kept.push_back(basis[i]);
  }
  std::vector<Binomial> reduced;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Binomial> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    auto r = reduce(kept[i], others, order);
    if (r) reduced.push_back(oriented(std::move(*r), order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Binomial& a, const Binomial& b) {
              Int da = order.weighted_degree(a.lhs), db = order.weighted_degree(b.lhs);
              if (da != db) return da < db;
              if (a.lhs != b.lhs) return order.compare(a.lhs, b.lhs) < 0;
              return order.compare(a.rhs, b.rhs) < 0;
            });
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  return reduced;
}

// A pure difference binomial ideal with an optional grading under which
// every generator is homogeneous and a memoized reduced Groebner basis
// per term order. Immutable apart from the guarded cache.
class BinomialIdeal {
 public:
  BinomialIdeal(std::size_t n, std::vector<Binomial> gens,
                std::optional<Grading> grading = std::nullopt, bool toric = false)
      : n_(n), gens_(std::move(gens)), grading_(std::move(grading)), toric_(toric) {
    for (const Binomial& f : gens_) {
      if (f.lhs.size() != n_) throw std::invalid_argument("generator arity mismatch");
      if (grading_) {
        if (grading_->degree(f.lhs) != grading_->degree(f.rhs))
          throw std::invalid_argument("generator not homogeneous for the grading");
      }
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  }

  // Copies and moves share the memoized bases; the mutex itself is not
  // transferred.
  BinomialIdeal(const BinomialIdeal& o)
      : n_(o.n_), gens_(o.gens_), grading_(o.grading_), toric_(o.toric_) {
    std::lock_guard<std::mutex> lk(o.mu_);
    cache_ = o.cache_;
  }
  BinomialIdeal(BinomialIdeal&& o) noexcept
      : n_(o.n_), gens_(std::move(o.gens_)), grading_(std::move(o.grading_)),
        toric_(o.toric_) {
    std::lock_guard<std::mutex> lk(o.mu_);
    cache_ = std::move(o.cache_);
  }
  BinomialIdeal& operator=(const BinomialIdeal& o) {
    if (this != &o) {
      BinomialIdeal tmp(o);
      *this = std::move(tmp);
    }
    return *this;
  }
  BinomialIdeal& operator=(BinomialIdeal&& o) noexcept {
    if (this != &o) {
      n_ = o.n_;
      gens_ = std::move(o.gens_);
      grading_ = std::move(o.grading_);
      toric_ = o.toric_;
      std::scoped_lock lk(mu_, o.mu_);
      cache_ = std::move(o.cache_);
    }
    return *this;
  }

  std::size_t nvars() const { return n_; }
  const std::vector<Binomial>& generators() const { return gens_; }
  const std::optional<Grading>& grading() const { return grading_; }
  bool is_toric() const { return toric_; }

  // Positive weight vector for global orders: the grading's positivity
  // certificate when available, otherwise all ones.
  std::vector<Int> order_weight() const {
    if (grading_ && grading_->positive) return grading_->weight;
    return std::vector<Int>(n_, Int(1));
  }

  TermOrder default_order() const { return grevlex_order(order_weight()); }

  const std::vector<Binomial>& groebner_basis(const TermOrder& order) const {
    std::string key = order.key();
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return *it->second;
    }
    auto gb = std::make_shared<std::vector<Binomial>>(buchberger(gens_, order));
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = cache_.emplace(key, std::move(gb));
    return *it->second;
  }

  bool contains(const Binomial& f) const {
    if (f.lhs.size() != n_) throw std::invalid_argument("arity mismatch");
    if (toric_ && grading_)
      return grading_->degree(f.lhs) == grading_->degree(f.rhs);
    auto r = reduce(f, groebner_basis(default_order()), default_order());
    return !r.has_value();
  }

 private:
  std::size_t n_;
  std::vector<Binomial> gens_;
  std::optional<Grading> grading_;
  bool toric_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<const std::vector<Binomial>>> cache_;
};

// Generators of (I : x_i^inf): reduced basis under a graded reverse-lex
// order with x_i cheapest, each element divided by its x_i content.
inline BinomialIdeal saturate_by_variable(const BinomialIdeal& ideal, std::size_t i) {
  std::size_t n = ideal.nvars();
  if (i >= n) throw std::invalid_argument("variable index out of range");
  std::vector<std::size_t> priority;
  for (std::size_t k = 0; k < n; ++k)
    if (k != i) priority.push_back(k);
  priority.push_back(i);  // cheapest
  TermOrder order = grevlex_order(ideal.order_weight(), priority);
  std::vector<Binomial> out;
  for (const Binomial& g : buchberger(ideal.generators(), order)) {
    // Stripping the full monomial content stays inside the saturation
    // and keeps the intermediate bases small.
    Binomial h = g;
    for (std::size_t k = 0; k < n; ++k) {
      Int common = std::min(h.lhs[k], h.rhs[k]);
      h.lhs[k] -= common;
      h.rhs[k] -= common;
    }
    auto c = make_binomial(std::move(h.lhs), std::move(h.rhs));
    if (c) out.push_back(std::move(*c));
  }
  return BinomialIdeal(n, std::move(out), ideal.grading(), ideal.is_toric());
}

// (I : (x_1 ... x_n)^inf), iterating the per-variable trick to a fixpoint.
inline BinomialIdeal saturate_full(BinomialIdeal ideal) {
  while (true) {
    BinomialIdeal next = ideal;
    for (std::size_t i = 0; i < ideal.nvars(); ++i)
      next = saturate_by_variable(next, i);
    if (next.generators() == ideal.generators()) return next;
    ideal = std::move(next);
  }
}

// The toric ideal of a positive grading: kernel-lattice binomials fully
// saturated, presented by their reduced Groebner basis under the default
// order.
inline BinomialIdeal toric_ideal(const Grading& a) {
  if (!a.positive) throw std::invalid_argument("toric_ideal: grading is not positive");
  std::size_t n = a.nvars();
  IntMatrix kern = kernel_lattice(a.matrix);
  std::vector<Binomial> gens;
  for (std::size_t r = 0; r < kern.rows; ++r) {
    Expo u(n, Int(0)), v(n, Int(0));
    for (std::size_t c = 0; c < n; ++c) {
      const Int& e = kern.at(r, c);
      if (e > 0) u[c] = e;
      else v[c] = -e;
    }
    auto f = make_binomial(std::move(u), std::move(v));
    if (f) gens.push_back(std::move(*f));
  }
  BinomialIdeal raw(n, std::move(gens), a, false);
  BinomialIdeal sat = saturate_full(std::move(raw));
  TermOrder order = grevlex_order(sat.order_weight());
  std::vector<Binomial> gb = buchberger(sat.generators(), order);
  std::vector<Binomial> canonical;
  for (Binomial& g : gb) {
    auto c = make_binomial(std::move(g.lhs), std::move(g.rhs));
    if (c) canonical.push_back(std::move(*c));
  }
  std::sort(canonical.begin(), canonical.end());
  return BinomialIdeal(n, std::move(canonical), a, true);
}

inline BinomialIdeal toric_ideal(const std::vector<Int>& curve) {
  return toric_ideal(curve_grading(curve));
}

inline bool membership(const BinomialIdeal& j, const Binomial& f) {
  return j.contains(f);
}

// ---------------------------------------------------------------------------
// Graver basis via the Lawrence lifting
// ---------------------------------------------------------------------------

// Lawrence grading of a d x n configuration: rows (A | 0) stacked on (I | I).
inline Grading lawrence_grading(const Grading& a) {
  std::size_t n = a.nvars(), d = a.dim();
  IntMatrix m(d + n, 2 * n);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = a.matrix.at(r, c);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(d + i, i) = 1;
    m.at(d + i, n + i) = 1;
  }
  return make_grading(std::move(m));
}

// Gr(A): the primitive binomials of I_A, obtained as the reduced Groebner
// basis of the Lawrence toric ideal mapped back by x^u y^v - x^v y^u ->
// x^u - x^v. Output canonically oriented and sorted.
inline std::vector<Binomial> graver_basis(const Grading& a) {
  if (!a.positive) throw std::invalid_argument("graver_basis: grading is not positive");
  std::size_t n = a.nvars();
  BinomialIdeal lawrence = toric_ideal(lawrence_grading(a));
  std::set<Binomial> out;
  for (const Binomial& g : lawrence.generators()) {
    Expo u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = g.lhs[i];
      v[i] = g.rhs[i];
    }
    auto f = make_binomial(std::move(u), std::move(v));
    if (f) out.insert(std::move(*f));
  }
  return std::vector<Binomial>(out.begin(), out.end());
}

inline std::vector<Binomial> graver_basis(const std::vector<Int>& curve) {
  return graver_basis(curve_grading(curve));
}

// The Graver elements of minimal A-degree.
inline std::vector<Binomial> min_graver_degree_filter(const Grading& a) {
  std::vector<Binomial> gr = graver_basis(a);
  if (gr.empty()) return gr;
  std::optional<std::vector<Int>> best;
  for (const Binomial& g : gr) {
    std::vector<Int> d = a.degree(g.lhs);
    if (!best || d < *best) best = d;
  }
  std::vector<Binomial> out;
  for (const Binomial& g : gr)
    if (a.degree(g.lhs) == *best) out.push_back(g);
  return out;
}

inline std::vector<Binomial> min_graver_degree_filter(const std::vector<Int>& curve) {
  return min_graver_degree_filter(curve_grading(curve));
}

}  // namespace toric
