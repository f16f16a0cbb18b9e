#pragma once

// Classification of monomial curves in four variables: the minimal system
// S u I u R, the uniqueness verdict and Gorenstein / complete intersection
// flags, plus canonical JSON reports.

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/critical.hh"
#include "toric/fibergraph.hh"
#include "toric/graver.hh"
#include "toric/grobner.hh"
#include "toric/semigroup.hh"

namespace toric {

struct Decomposition {
  CriticalCase cc;
  std::vector<Binomial> s, i, r;  // original coordinates
  BettiTable betti;
};

namespace detail {

inline Expo permute_to(const Expo& u, const std::vector<std::size_t>& perm) {
  Expo v(u.size(), Int(0));
  for (std::size_t p = 0; p < perm.size(); ++p) v[p] = u[perm[p]];
  return v;
}

// Land the {1,2}-side exponent pair (in case coordinates) in the window
// 0 < u1 <= c1 by adding integer multiples of (c1, -c2); the shift moves
// along the circuit x_1^{c1} - x_2^{c2} and stays inside the connected
// component. Left unchanged when the window is unreachable.
inline void circuit_shift(Expo& u, std::size_t p1, std::size_t p2, const Int& c1,
                          const Int& c2) {
  if (u[p1] == 0 && u[p2] == 0) return;
  // alpha with 0 < u[p1] - alpha c1 <= c1.
  Int alpha;
  if (u[p1] > 0)
    alpha = (u[p1] - 1) / c1;
  else
    alpha = -1;
  Int n1 = u[p1] - alpha * c1;
  Int n2 = u[p2] + alpha * c2;
  if (n1 <= 0 || n2 < 0) return;
  u[p1] = n1;
  u[p2] = n2;
}

}  // namespace detail

// Split the minimal generating set per the main decomposition: the
// critical system S replaces the generators at critical degrees, I holds
// the indispensable two-against-two binomials, R the remaining ones,
// normalized by circuit shifts into the case normal form.
inline Decomposition decompose_minimal_system(const std::vector<Int>& a,
                                              const BinomialIdeal& ia) {
  if (a.size() != 4) throw std::invalid_argument("needs four generators");
  Decomposition out;
  out.cc = classify_critical_case(a);
  out.s = out.cc.s;
  out.betti = minimal_generating_set(ia);
  const CriticalExponents& c = out.cc.c;
  const std::vector<std::size_t>& perm = out.cc.permutation;
  const std::string& label = out.cc.label;

  std::map<Int, std::size_t> s_count;
  for (const Binomial& f : out.s) {
    Int d = 0;
    for (std::size_t k = 0; k < 4; ++k) d += f.lhs[k] * a[k];
    ++s_count[d];
  }

  std::map<Int, std::size_t> betti_count;
  for (const BettiEntry& e : out.betti.entries)
    betti_count[e.degree[0]] = e.generators.size();
  for (const auto& [d, cnt] : s_count)
    if (betti_count.count(d) == 0 || betti_count[d] != cnt)
      throw std::logic_error("critical system size disagrees with the Betti count");

  for (const BettiEntry& e : out.betti.entries) {
    if (s_count.count(e.degree[0])) continue;  // covered by S
    for (const Binomial& g : e.generators) {
      if (semi_primitive_shape(g, c, ia)) {
        out.i.push_back(g);
        continue;
      }
      // Normalize into case coordinates when the supports split as
      // {1,2} against {3,4}.
      Expo lhs = detail::permute_to(g.lhs, perm);
      Expo rhs = detail::permute_to(g.rhs, perm);
      auto side12 = [](const Expo& u) {
        return u[2] == 0 && u[3] == 0;
      };
      auto side34 = [](const Expo& u) {
        return u[0] == 0 && u[1] == 0;
      };
      if (side12(rhs) && side34(lhs)) std::swap(lhs, rhs);
      if (side12(lhs) && side34(rhs) &&
          (label == "2b" || label == "2c" || label == "4b")) {
        Int c1 = c.c[perm[0]], c2 = c.c[perm[1]];
        detail::circuit_shift(lhs, 0, 1, c1, c2);
        if (label == "2c") {
          Int c3 = c.c[perm[2]], c4 = c.c[perm[3]];
          detail::circuit_shift(rhs, 2, 3, c3, c4);
        }
      }
      auto f = make_binomial(detail::permute_back(lhs, perm),
                             detail::permute_back(rhs, perm));
      if (!f) throw std::logic_error("normalization collapsed a generator");
      out.r.push_back(std::move(*f));
    }
  }
  std::sort(out.i.begin(), out.i.end());
  std::sort(out.r.begin(), out.r.end());
  if (out.s.size() + out.i.size() + out.r.size() != out.betti.mu())
    throw std::logic_error("decomposition size disagrees with mu");
  return out;
}

inline Decomposition decompose_minimal_system(const std::vector<Int>& a) {
  return decompose_minimal_system(a, toric_ideal(a));
}

struct ClassificationReport {
  std::vector<Int> a;
  std::vector<std::size_t> permutation;  // 1-based in serialized form
  std::vector<Int> c;
  std::string case_label;
  std::vector<Binomial> s, i, r;
  std::size_t mu_ia = 0;
  std::size_t mu_ca = 0;
  bool unique = false;
  bool exact_unique_crosscheck = false;  // independent criterion, not serialized
  bool gorenstein = false;
  bool complete_intersection = false;
  std::vector<std::pair<Int, std::size_t>> betti;  // (degree, count)
};

inline ClassificationReport classify(const std::vector<Int>& a) {
  if (a.size() != 4) throw std::invalid_argument("needs four generators");
  if (vector_gcd(a) != 1) throw std::invalid_argument("gcd must be 1");
  BinomialIdeal ia = toric_ideal(a);
  Decomposition d = decompose_minimal_system(a, ia);
  ClassificationReport rep;
  rep.a = a;
  rep.permutation = d.cc.permutation;
  rep.c = d.cc.c.c;
  rep.case_label = d.cc.label;
  rep.s = d.s;
  rep.i = d.i;
  rep.r = d.r;
  rep.mu_ia = d.betti.mu();
  rep.mu_ca = d.cc.mu_ca;
  rep.unique = critical_unique(d.cc, ia) && d.r.empty();
  rep.exact_unique_crosscheck = unique_minimal_system(ia);
  rep.gorenstein = NumericalSemigroup(a).is_symmetric();
  rep.complete_intersection = rep.mu_ia == 3;
  for (const BettiEntry& e : d.betti.entries)
    rep.betti.emplace_back(e.degree[0], e.generators.size());
  return rep;
}

enum class BresinskyForm { matches, no_match };

// Cyclic critical pattern x1^{c1} - x3 x4, x2^{c2} - x1 x4, x3^{c3} -
// x1 x2, x4^{c4} - x2 x3 (all supports of size three), searched over all
// variable permutations. A match forces uniqueness; a mismatch there is a
// hard failure.
inline BresinskyForm verify_bresinsky_form(const std::vector<Int>& a) {
  if (a.size() != 4) throw std::invalid_argument("needs four generators");
  CriticalExponents c = critical_exponents(a);
  std::vector<std::vector<Binomial>> crit;
  for (std::size_t i = 0; i < 4; ++i) crit.push_back(critical_binomials(a, i, c));
  // tail_pairs[r] = roles carrying the tail of the role-r power.
  const std::size_t tail_pairs[4][2] = {{2, 3}, {0, 3}, {0, 1}, {1, 2}};
  std::vector<std::size_t> perm = {0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  bool found = false;
  do {
    bool ok = true;
    for (std::size_t r = 0; r < 4 && ok; ++r) {
      std::size_t var = perm[r];
      std::size_t t0 = perm[tail_pairs[r][0]], t1 = perm[tail_pairs[r][1]];
      bool has = false;
      for (const Binomial& f : crit[var])
        if (support(f.rhs) == std::vector<std::size_t>{std::min(t0, t1),
                                                       std::max(t0, t1)})
          has = true;
      ok = has;
    }
    if (ok) found = true;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  if (!found) return BresinskyForm::no_match;
  if (!unique_minimal_system(toric_ideal(a)))
    throw std::logic_error("cyclic critical pattern without unique generation");
  return BresinskyForm::matches;
}

// ---------------------------------------------------------------------------
// JSON reports
// ---------------------------------------------------------------------------

namespace detail {

inline std::int64_t json_int(const Int& x) {
  return to_i64(x, "JSON integer field");
}

}  // namespace detail

inline nlohmann::json report_to_json(const ClassificationReport& rep) {
  nlohmann::json j;
  auto ints = [](const std::vector<Int>& v) {
    std::vector<std::int64_t> out;
    for (const Int& x : v) out.push_back(detail::json_int(x));
    return out;
  };
  auto binomials = [](const std::vector<Binomial>& v) {
    std::vector<std::string> out;
    for (const Binomial& f : v) out.push_back(binomial_to_string(f));
    return out;
  };
  j["A"] = ints(rep.a);
  std::vector<std::int64_t> perm;
  for (std::size_t p : rep.permutation) perm.push_back(static_cast<std::int64_t>(p) + 1);
  j["permutation"] = perm;
  j["c"] = ints(rep.c);
  j["case"] = rep.case_label;
  j["S"] = binomials(rep.s);
  j["I"] = binomials(rep.i);
  j["R"] = binomials(rep.r);
  j["mu_IA"] = rep.mu_ia;
  j["mu_CA"] = rep.mu_ca;
  j["unique"] = rep.unique;
  j["gorenstein"] = rep.gorenstein;
  j["complete_intersection"] = rep.complete_intersection;
  std::vector<std::pair<std::int64_t, std::size_t>> betti;
  for (const auto& [deg, cnt] : rep.betti) betti.emplace_back(detail::json_int(deg), cnt);
  j["betti"] = betti;
  return j;
}

inline ClassificationReport report_from_json(const nlohmann::json& j) {
  ClassificationReport rep;
  for (std::int64_t x : j.at("A").get<std::vector<std::int64_t>>()) rep.a.push_back(x);
  for (std::int64_t p : j.at("permutation").get<std::vector<std::int64_t>>())
    rep.permutation.push_back(static_cast<std::size_t>(p - 1));
  for (std::int64_t x : j.at("c").get<std::vector<std::int64_t>>()) rep.c.push_back(x);
  rep.case_label = j.at("case").get<std::string>();
  auto binomials = [&](const char* key) {
    std::vector<Binomial> out;
    for (const std::string& s : j.at(key).get<std::vector<std::string>>())
      out.push_back(parse_binomial_raw(s, rep.a.size()));
    return out;
  };
  rep.s = binomials("S");
  rep.i = binomials("I");
  rep.r = binomials("R");
  rep.mu_ia = j.at("mu_IA").get<std::size_t>();
  rep.mu_ca = j.at("mu_CA").get<std::size_t>();
  rep.unique = j.at("unique").get<bool>();
  rep.exact_unique_crosscheck = rep.unique;
  rep.gorenstein = j.at("gorenstein").get<bool>();
  rep.complete_intersection = j.at("complete_intersection").get<bool>();
  for (const auto& e : j.at("betti"))
    rep.betti.emplace_back(Int(e.at(0).get<std::int64_t>()),
                           e.at(1).get<std::size_t>());
  return rep;
}

}  // namespace toric
