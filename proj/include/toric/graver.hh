#pragma once

// Indispensability patterns for primitive binomials of monomial curves in
// four variables: two-variable against two-variable shapes with exponents
// below the critical bounds.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "toric/critical.hh"
#include "toric/fibergraph.hh"
#include "toric/grobner.hh"
#include "toric/semigroup.hh"

namespace toric {

namespace detail {

// x_i^{u_i} x_j^{u_j} - x_k^{u_k} x_l^{u_l} with {i,j,k,l} = {1,..,4} and
// all exponents positive.
inline bool full_split_shape(const Binomial& f) {
  auto sl = support(f.lhs);
  auto sr = support(f.rhs);
  if (sl.size() != 2 || sr.size() != 2) return false;
  std::vector<std::size_t> all = sl;
  all.insert(all.end(), sr.begin(), sr.end());
  std::sort(all.begin(), all.end());
  return all == std::vector<std::size_t>{0, 1, 2, 3};
}

inline bool strict_below(const Expo& u, const CriticalExponents& c,
                         const std::vector<std::size_t>& vars) {
  for (std::size_t i : vars)
    if (u[i] >= c.c[i]) return false;
  return true;
}

}  // namespace detail

// Graver elements x_i^{u_i}x_j^{u_j} - x_k^{u_k}x_l^{u_l} with every
// exponent strictly below its critical bound. Each is certified
// indispensable by the exact fiber test; a failure would falsify the
// pattern criterion and aborts.
inline std::vector<Binomial> primitive_indispensables(const std::vector<Int>& a) {
  if (a.size() != 4) throw std::invalid_argument("needs four generators");
  CriticalExponents c = critical_exponents(a);
  BinomialIdeal ia = toric_ideal(a);
  std::vector<Binomial> out;
  for (const Binomial& f : graver_basis(ia.grading().value())) {
    if (!detail::full_split_shape(f)) continue;
    if (!detail::strict_below(f.lhs, c, support(f.lhs))) continue;
    if (!detail::strict_below(f.rhs, c, support(f.rhs))) continue;
    if (indispensable_binomial(ia, f) != Tristate::yes)
      throw std::logic_error("pattern element failed the exact indispensability test");
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Whether f matches the weaker pattern: one side with both exponents
// strictly below the critical bounds and the other side an indispensable
// monomial. Both orientations are tried.
inline bool semi_primitive_shape(const Binomial& f, const CriticalExponents& c,
                                 const BinomialIdeal& ia) {
  if (!detail::full_split_shape(f)) return false;
  for (const Expo* left : {&f.lhs, &f.rhs}) {
    const Expo& u = *left;
    const Expo& v = left == &f.lhs ? f.rhs : f.lhs;
    if (!detail::strict_below(u, c, support(u))) continue;
    if (indispensable_monomial(ia, v)) return true;
  }
  return false;
}

// The set of all minimal generators matching the weaker pattern. These
// are exactly the indispensable full-split generators outside the
// critical system.
inline std::vector<Binomial> semi_primitive_indispensables(const std::vector<Int>& a) {
  if (a.size() != 4) throw std::invalid_argument("needs four generators");
  CriticalExponents c = critical_exponents(a);
  BinomialIdeal ia = toric_ideal(a);
  std::vector<Binomial> out;
  for (const BettiEntry& e : minimal_generating_set(ia).entries)
    for (const Binomial& f : e.generators)
      if (semi_primitive_shape(f, c, ia)) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toric
