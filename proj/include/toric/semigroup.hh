#pragma once

// Numerical semigroup arithmetic: Apery sets, Frobenius number, symmetry,
// critical exponents and exact fiber enumeration.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "toric/exponents.hh"

namespace toric {

namespace detail {

inline std::int64_t to_i64(const Int& x, const char* what) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
  return static_cast<std::int64_t>(x);
}

}  // namespace detail

inline Int vector_gcd(const std::vector<Int>& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd(g, x);
  return g;
}

// The numerical semigroup generated by positive integers with gcd 1.
// The Apery set with respect to the least generator and the Frobenius
// number are computed once at construction; afterwards the value is
// immutable.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<Int> generators)
      : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("semigroup needs generators");
    for (const Int& g : gens_)
      if (g <= 0) throw std::invalid_argument("generators must be positive");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (vector_gcd(gens_) != 1)
      throw std::invalid_argument("generators must have gcd 1");
    amin_ = detail::to_i64(gens_.front(), "least generator");
    compute_apery();
  }

  const std::vector<Int>& generators() const { return gens_; }

  // Apery set with respect to m: entry r is the least element of the
  // semigroup congruent to r mod m.
  std::vector<Int> apery_set(const Int& m) const {
    if (std::find(gens_.begin(), gens_.end(), m) == gens_.end())
      throw std::invalid_argument("apery_set: m is not a generator");
    if (m == gens_.front()) {
      return std::vector<Int>(apery_.begin(), apery_.end());
    }
    std::int64_t mm = detail::to_i64(m, "apery modulus");
    std::vector<std::int64_t> ap = dijkstra_apery(mm);
    return std::vector<Int>(ap.begin(), ap.end());
  }

  Int frobenius_number() const { return frob_; }

  bool contains(const Int& b) const {
    if (b < 0) throw std::invalid_argument("contains: b must be non-negative");
    if (b > frob_) return true;
    std::int64_t bb = detail::to_i64(b, "membership query");
    return bb >= apery_[static_cast<std::size_t>(bb % amin_)];
  }

  // Gap-complement symmetry: z in S xor (F - z) in S for z in [0, F].
  bool is_symmetric() const {
    if (frob_ < 0) return true;  // S = N
    std::int64_t f = detail::to_i64(frob_, "Frobenius number");
    for (std::int64_t z = 0; z <= f; ++z) {
      bool a = contains(Int(z));
      bool b = contains(Int(f - z));
      if (a == b) return false;
    }
    return true;
  }

  std::int64_t genus() const {
    if (frob_ < 0) return 0;
    std::int64_t f = detail::to_i64(frob_, "Frobenius number");
    std::int64_t g = 0;
    for (std::int64_t z = 0; z <= f; ++z)
      if (!contains(Int(z))) ++g;
    return g;
  }

 private:
  void compute_apery() {
    std::vector<std::int64_t> ap = dijkstra_apery(amin_);
    apery_ = std::move(ap);
    std::int64_t mx = *std::max_element(apery_.begin(), apery_.end());
    frob_ = Int(mx - amin_);
  }

  // Dijkstra round-robin over residue classes mod m.
  std::vector<std::int64_t> dijkstra_apery(std::int64_t m) const {
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(m), inf);
    dist[0] = 0;
    using Node = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> pq;
    pq.push({0, 0});
    std::vector<std::int64_t> steps;
    for (const Int& g : gens_) steps.push_back(detail::to_i64(g, "generator"));
    while (!pq.empty()) {
      auto [val, r] = pq.top();
      pq.pop();
      if (val != dist[static_cast<std::size_t>(r)]) continue;
      for (std::int64_t s : steps) {
        std::int64_t nv = val + s;
        std::int64_t nr = nv % m;
        if (nv < dist[static_cast<std::size_t>(nr)]) {
          dist[static_cast<std::size_t>(nr)] = nv;
          pq.push({nv, nr});
        }
      }
    }
    return dist;
  }

  std::vector<Int> gens_;
  std::int64_t amin_;
  std::vector<std::int64_t> apery_;
  Int frob_;
};

// Membership of b in the monoid generated by `gens` (gcd may exceed 1).
// Bounded dynamic programming; only valid for b >= 0.
inline bool monoid_contains(const std::vector<Int>& gens, const Int& b) {
  if (b < 0) return false;
  if (b == 0) return true;
  std::int64_t bb = detail::to_i64(b, "monoid membership bound");
  std::vector<char> reach(static_cast<std::size_t>(bb) + 1, 0);
  reach[0] = 1;
  for (const Int& g : gens) {
    if (g <= 0 || g > bb) continue;
    std::int64_t s = static_cast<std::int64_t>(g);
    for (std::int64_t v = s; v <= bb; ++v)
      if (reach[static_cast<std::size_t>(v - s)])
        reach[static_cast<std::size_t>(v)] = 1;
  }
  return reach[static_cast<std::size_t>(bb)] != 0;
}

struct CriticalExponents {
  std::vector<Int> c;
};

// c_i = least k >= 1 with k * a_i in the monoid generated by the other
// generators. Membership in the sub-monoid is tested directly (its gcd
// may exceed 1).
inline CriticalExponents critical_exponents(const std::vector<Int>& a) {
  if (a.size() < 2) throw std::invalid_argument("need at least two generators");
  if (vector_gcd(a) != 1) throw std::invalid_argument("gcd must be 1");
  CriticalExponents out;
  out.c.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Int> others;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) others.push_back(a[j]);
    // k a_i is representable for k = a_j / gcd(a_i, a_j), so the search
    // below a bound of min_j lcm(a_i, a_j) always terminates.
    for (Int k = 1;; ++k) {
      if (monoid_contains(others, k * a[i])) {
        out.c[i] = k;
        break;
      }
    }
  }
  return out;
}

// All u >= 0 with sum u_i a_i = b, in lexicographic order.
inline std::vector<Expo> fiber(const std::vector<Int>& a, const Int& b) {
  if (b < 0) throw std::invalid_argument("fiber: degree must be non-negative");
  for (const Int& x : a)
    if (x <= 0) throw std::invalid_argument("fiber: generators must be positive");
  std::vector<Expo> out;
  Expo cur(a.size(), Int(0));
  // DFS assigning coordinates from the left produces lexicographic order.
  auto rec = [&](auto&& self, std::size_t i, const Int& rem) -> void {
    if (i == a.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    if (i + 1 == a.size()) {
      if (rem % a[i] == 0) {
        cur[i] = rem / a[i];
        out.push_back(cur);
        cur[i] = 0;
      }
      return;
    }
    Int max_e = rem / a[i];
    for (Int e = 0; e <= max_e; ++e) {
      cur[i] = e;
      self(self, i + 1, rem - e * a[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, b);
  return out;
}

}  // namespace toric
