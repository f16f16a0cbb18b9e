#pragma once

// Critical binomials x_i^{c_i} - x^v, the critical ideal C_A, its minimal
// system by case analysis, and circuits.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/exponents.hh"
#include "toric/fibergraph.hh"
#include "toric/grobner.hh"
#include "toric/semigroup.hh"

namespace toric {

// All critical binomials with respect to x_i, stored with the pure power
// on the left (the defining shape, not the canonical orientation). Tails
// are the fiber members of c_i a_i avoiding x_i, in lexicographic order.
inline std::vector<Binomial> critical_binomials(const std::vector<Int>& a,
                                                std::size_t i,
                                                const CriticalExponents& c) {
  std::size_t n = a.size();
  if (i >= n) throw std::invalid_argument("variable index out of range");
  std::vector<Binomial> out;
  Expo power(n, Int(0));
  power[i] = c.c[i];
  for (const Expo& v : fiber(a, c.c[i] * a[i])) {
    if (v[i] != 0) continue;
    out.push_back(Binomial{power, v});
  }
  if (out.empty()) throw std::logic_error("critical fiber has no tail");
  return out;
}

inline std::vector<Binomial> critical_binomials(const std::vector<Int>& a,
                                                std::size_t i) {
  return critical_binomials(a, i, critical_exponents(a));
}

// C_A, presented by the union of all critical binomials. Not marked toric:
// membership goes through Groebner reduction.
inline BinomialIdeal critical_ideal(const std::vector<Int>& a) {
  CriticalExponents c = critical_exponents(a);
  std::vector<Binomial> gens;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (Binomial& f : critical_binomials(a, i, c)) {
      auto g = make_binomial(std::move(f.lhs), std::move(f.rhs));
      if (g) gens.push_back(std::move(*g));
    }
  return BinomialIdeal(a.size(), std::move(gens), curve_grading(a), false);
}

struct CriticalCase {
  std::string label;                      // 1, 2a, 2b, 2c, 2d, 3, 4a, 4b
  std::vector<Binomial> s;                // minimal system of C_A, original coordinates
  std::size_t mu_ca = 0;
  // permutation[p] = original index playing role p of the case normal form.
  std::vector<std::size_t> permutation;
  CriticalExponents c;                    // original coordinates
  std::vector<Int> degrees;               // c_i a_i, original coordinates
};

namespace detail {

inline Expo permute_back(const Expo& u, const std::vector<std::size_t>& perm) {
  Expo v(u.size(), Int(0));
  for (std::size_t p = 0; p < perm.size(); ++p) v[perm[p]] = u[p];
  return v;
}

// Lexicographically least tail of x_i whose support has at least two
// elements. Such a tail exists in every position where the case analysis
// demands one.
inline Expo wide_tail(const std::vector<Int>& a, std::size_t i,
                      const CriticalExponents& c) {
  for (const Binomial& f : critical_binomials(a, i, c))
    if (support(f.rhs).size() >= 2) return f.rhs;
  throw std::logic_error("no critical tail with support of size >= 2");
}

// Whether the pair {i, j} (with c_i a_i = c_j a_j) admits a critical
// binomial other than +-(x_i^{c_i} - x_j^{c_j}).
inline bool pair_has_extras(const std::vector<Int>& a, std::size_t i, std::size_t j,
                            const CriticalExponents& c) {
  for (std::size_t v : {i, j}) {
    std::size_t w = v == i ? j : i;
    for (const Binomial& f : critical_binomials(a, v, c)) {
      bool partner_power = support(f.rhs) == std::vector<std::size_t>{w} &&
                           f.rhs[w] == c.c[w];
      if (!partner_power) return true;
    }
  }
  return false;
}

}  // namespace detail

// Case analysis of the minimal system of C_A for four generators. The
// label is determined by the equality pattern of the degrees c_i a_i plus
// which equal-degree pairs carry critical binomials beyond the circuit;
// mu(C_A) is computed independently from the fiber graphs of C_A and must
// agree with the case table.
inline CriticalCase classify_critical_case(const std::vector<Int>& a) {
  if (a.size() != 4) throw std::invalid_argument("case analysis needs four generators");
  if (vector_gcd(a) != 1) throw std::invalid_argument("gcd must be 1");
  CriticalExponents c = critical_exponents(a);
  std::vector<Int> d(4);
  for (std::size_t i = 0; i < 4; ++i) d[i] = c.c[i] * a[i];

  // Groups of equal degree, each ascending, largest group first, ties by
  // least member.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < 4; ++i) {
    bool placed = false;
    for (auto& g : groups)
      if (d[g.front()] == d[i]) {
        g.push_back(i);
        placed = true;
      }
    if (!placed) groups.push_back({i});
  }
  std::sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return x.front() < y.front();
  });

  std::size_t mu = minimal_generating_set(critical_ideal(a)).mu();
  if (mu > 4) throw std::logic_error("mu(C_A) exceeds four");

  CriticalCase out;
  out.mu_ca = mu;

  std::vector<std::size_t> perm;  // role p -> original index
  std::string label;
  // s described in permuted roles: (power role, tail spec) where the tail
  // is either the partner power (role) or a wide tail.
  struct Gen {
    std::size_t var;                       // role of the left power
    std::optional<std::size_t> partner;    // role of a power tail, else wide tail
  };
  std::vector<Gen> shape;

  std::vector<std::size_t> sizes;
  for (const auto& g : groups) sizes.push_back(g.size());

  if (sizes == std::vector<std::size_t>{1, 1, 1, 1}) {
    label = "1";
    perm = {0, 1, 2, 3};
    for (std::size_t p = 0; p < 4; ++p) shape.push_back({p, std::nullopt});
    if (mu != 4) throw std::logic_error("case 1 requires mu(C_A) = 4");
  } else if (sizes == std::vector<std::size_t>{4}) {
    label = "2d";
    perm = {0, 1, 2, 3};
    shape = {{0, 1}, {1, 2}, {2, 3}};
    if (mu != 3) throw std::logic_error("case 2d requires mu(C_A) = 3");
  } else if (sizes == std::vector<std::size_t>{3, 1}) {
    label = "3";
    perm = {groups[0][0], groups[0][1], groups[0][2], groups[1][0]};
    shape = {{0, 1}, {1, 2}, {3, std::nullopt}};
    if (mu != 3) throw std::logic_error("case 3 requires mu(C_A) = 3");
  } else if (sizes == std::vector<std::size_t>{2, 2}) {
    bool e0 = detail::pair_has_extras(a, groups[0][0], groups[0][1], c);
    bool e1 = detail::pair_has_extras(a, groups[1][0], groups[1][1], c);
    if (e0 && e1) {
      label = "2a";
      perm = {groups[0][0], groups[0][1], groups[1][0], groups[1][1]};
      shape = {{0, 1}, {1, std::nullopt}, {2, 3}, {3, std::nullopt}};
      if (mu != 4) throw std::logic_error("case 2a requires mu(C_A) = 4");
    } else if (e0 || e1) {
      label = "2b";
      const auto& plain = e0 ? groups[1] : groups[0];
      const auto& extra = e0 ? groups[0] : groups[1];
      perm = {plain[0], plain[1], extra[0], extra[1]};
      shape = {{0, 1}, {2, 3}, {3, std::nullopt}};
      if (mu != 3) throw std::logic_error("case 2b requires mu(C_A) = 3");
    } else {
      label = "2c";
      perm = {groups[0][0], groups[0][1], groups[1][0], groups[1][1]};
      shape = {{0, 1}, {2, 3}};
      if (mu != 2) throw std::logic_error("case 2c requires mu(C_A) = 2");
    }
  } else {  // sizes {2, 1, 1}
    const auto& pair = groups[0];
    std::vector<std::size_t> singles = {groups[1][0], groups[2][0]};
    std::sort(singles.begin(), singles.end());
    perm = {pair[0], pair[1], singles[0], singles[1]};
    if (detail::pair_has_extras(a, pair[0], pair[1], c)) {
      label = "4a";
      shape = {{0, 1}, {1, std::nullopt}, {2, std::nullopt}, {3, std::nullopt}};
      if (mu != 4) throw std::logic_error("case 4a requires mu(C_A) = 4");
    } else {
      label = "4b";
      shape = {{0, 1}, {2, std::nullopt}, {3, std::nullopt}};
      if (mu != 3) throw std::logic_error("case 4b requires mu(C_A) = 3");
    }
  }

  // A wide tail is required at role 2 of cases 2a/4a and role 4 of 2b;
  // when the designated variable lacks one, its pair partner must carry
  // it instead: swap them.
  auto ensure_wide = [&](std::size_t role) {
    std::size_t v = perm[role];
    for (const Binomial& f : critical_binomials(a, v, c))
      if (support(f.rhs).size() >= 2) return;
    std::size_t other = role == 1 ? 0 : (role == 3 ? 2 : role);
    std::swap(perm[role], perm[other]);
  };
  if (label == "2a") {
    ensure_wide(1);
    ensure_wide(3);
  } else if (label == "2b") {
    ensure_wide(3);
  } else if (label == "4a") {
    ensure_wide(1);
  }

  out.label = label;
  out.permutation = perm;
  out.c = c;
  out.degrees = d;
  for (const Gen& g : shape) {
    std::size_t v = perm[g.var];
    Expo power(4, Int(0));
    power[v] = c.c[v];
    Expo tail(4, Int(0));
    if (g.partner) {
      std::size_t w = perm[*g.partner];
      tail[w] = c.c[w];
    } else {
      tail = detail::wide_tail(a, v, c);
    }
    out.s.push_back(Binomial{std::move(power), std::move(tail)});
  }
  if (out.s.size() != mu)
    throw std::logic_error("case system size disagrees with mu(C_A)");
  return out;
}

// C_A has a unique minimal system only in cases 1, 2c and 4b, and then
// exactly when every non-power tail of S is an indispensable monomial of
// I_A (which transfers to C_A).
inline bool critical_unique(const CriticalCase& cc, const BinomialIdeal& ia) {
  if (cc.label != "1" && cc.label != "2c" && cc.label != "4b") return false;
  for (const Binomial& f : cc.s) {
    if (support(f.rhs).size() < 2) continue;  // circuit link, no tail condition
    if (!indispensable_monomial(ia, f.rhs)) return false;
  }
  return true;
}

inline bool critical_unique(const std::vector<Int>& a) {
  return critical_unique(classify_critical_case(a), toric_ideal(a));
}

// Whether f has the critical shape x_i^{c_i} - x^v with v_i = 0 for some i.
inline bool is_critical_binomial(const std::vector<Int>& a, const Binomial& f,
                                 const CriticalExponents& c) {
  for (const Expo* side : {&f.lhs, &f.rhs}) {
    const Expo& u = *side;
    const Expo& v = side == &f.lhs ? f.rhs : f.lhs;
    auto s = support(u);
    if (s.size() != 1) continue;
    std::size_t i = s[0];
    if (u[i] == c.c[i] && v[i] == 0) return true;
  }
  return false;
}

// Indispensability of a critical binomial, decided by the exact test on
// the toric side.
inline bool indispensable_critical(const std::vector<Int>& a, const Binomial& f) {
  CriticalExponents c = critical_exponents(a);
  if (!is_critical_binomial(a, f, c))
    throw std::invalid_argument("binomial is not critical");
  BinomialIdeal ia = toric_ideal(a);
  auto g = make_binomial(f.lhs, f.rhs);
  if (!g || !ia.contains(*g)) throw std::invalid_argument("binomial not in the ideal");
  return indispensable_binomial(ia, *g) == Tristate::yes;
}

// ---------------------------------------------------------------------------
// Circuits
// ---------------------------------------------------------------------------

inline Binomial circuit(const std::vector<Int>& a, std::size_t i, std::size_t j) {
  if (i >= a.size() || j >= a.size() || i == j)
    throw std::invalid_argument("bad circuit pair");
  Int g = gcd(a[i], a[j]);
  Expo u(a.size(), Int(0)), v(a.size(), Int(0));
  u[i] = a[j] / g;
  v[j] = a[i] / g;
  return Binomial{std::move(u), std::move(v)};
}

// All circuits x_i^{a_j/g} - x_j^{a_i/g}, in pair order i < j.
inline std::vector<Binomial> circuits(const std::vector<Int>& a) {
  std::vector<Binomial> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      out.push_back(circuit(a, i, j));
  return out;
}

// The circuit on (i, j) is indispensable iff b - a_k is outside the
// semigroup for every k outside the pair, where b = lcm(a_i, a_j).
inline bool circuit_indispensable(const std::vector<Int>& a, std::size_t i,
                                  std::size_t j) {
  if (i >= a.size() || j >= a.size() || i == j)
    throw std::invalid_argument("bad circuit pair");
  Int b = a[i] / gcd(a[i], a[j]) * a[j];
  NumericalSemigroup s(a);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == i || k == j) continue;
    Int r = b - a[k];
    if (r >= 0 && s.contains(r)) return false;
  }
  return true;
}

// Membership of the circuit in the reduced Groebner basis under the
// order making all variables outside {i, j} cheapest (x_j cheaper than
// x_i, cheap variables in ascending index order).
inline bool circuit_in_reduced_gb(const std::vector<Int>& a, std::size_t i,
                                  std::size_t j) {
  if (i >= a.size() || j >= a.size() || i == j)
    throw std::invalid_argument("bad circuit pair");
  std::vector<std::size_t> priority = {i, j};
  for (std::size_t k = 0; k < a.size(); ++k)
    if (k != i && k != j) priority.push_back(k);
  TermOrder order = grevlex_order(std::vector<Int>(a), std::move(priority));
  BinomialIdeal ia = toric_ideal(a);
  Binomial f = circuit(a, i, j);
  for (const Binomial& g : ia.groebner_basis(order))
    if (same_binomial(f, g)) return true;
  return false;
}

enum class ChainStatus { applies_and_verified, not_applicable };

// When every critical degree coincides and the common fiber consists of
// exactly the pure powers x_i^{c_i}, the chain of consecutive critical
// circuits generates the whole toric ideal with mu = n - 1. Detects the
// hypothesis and, when it applies, verifies the conclusion by reduction.
inline ChainStatus chain_implies_toric(const std::vector<Int>& a) {
  if (a.size() < 2) throw std::invalid_argument("need at least two generators");
  CriticalExponents c = critical_exponents(a);
  Int d = c.c[0] * a[0];
  for (std::size_t i = 1; i < a.size(); ++i)
    if (c.c[i] * a[i] != d) return ChainStatus::not_applicable;
  std::vector<Expo> powers;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Expo u(a.size(), Int(0));
    u[i] = c.c[i];
    powers.push_back(std::move(u));
  }
  std::sort(powers.begin(), powers.end(), lex_less);
  if (fiber(a, d) != powers) return ChainStatus::not_applicable;

  std::vector<Binomial> chain;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    Expo u(a.size(), Int(0)), v(a.size(), Int(0));
    u[i] = c.c[i];
    v[i + 1] = c.c[i + 1];
    chain.push_back(*make_binomial(std::move(u), std::move(v)));
  }
  BinomialIdeal ia = toric_ideal(a);
  if (minimal_generating_set(ia).mu() != a.size() - 1)
    throw std::logic_error("chain hypothesis holds but mu differs from n - 1");
  TermOrder order = ia.default_order();
  std::vector<Binomial> chain_gb = buchberger(chain, order);
  for (const Binomial& g : ia.generators())
    if (reduce(g, chain_gb, order))
      throw std::logic_error("chain hypothesis holds but does not generate");
  return ChainStatus::applies_and_verified;
}

}  // namespace toric
