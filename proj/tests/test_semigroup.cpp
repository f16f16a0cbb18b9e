#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hh"
#include "toric/semigroup.hh"

using namespace toric;

namespace {

std::vector<Int> gens(std::vector<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("membership") {
  NumericalSemigroup s(gens({6, 8, 17, 19}));
  CHECK(s.contains(Int(24)));
  CHECK_FALSE(s.contains(Int(7)));
  CHECK(s.contains(Int(0)));
  CHECK(s.contains(Int(17)));
  CHECK_FALSE(s.contains(Int(9)));
  CHECK_THROWS(s.contains(Int(-1)));
  CHECK_THROWS(NumericalSemigroup(gens({2, 4})));
  CHECK_THROWS(NumericalSemigroup(gens({0, 1})));
}

TEST_CASE("apery sets") {
  NumericalSemigroup s(gens({6, 8, 17, 19}));
  CHECK(s.apery_set(Int(6)) == gens({0, 19, 8, 27, 16, 17}));
  NumericalSemigroup t(gens({2, 3}));
  CHECK(t.apery_set(Int(2)) == gens({0, 3}));
  NumericalSemigroup n(gens({1}));
  CHECK(n.apery_set(Int(1)) == gens({0}));
  CHECK_THROWS(s.apery_set(Int(7)));
  // Apery entries are in S and entry - m is not, entrywise.
  auto ap = s.apery_set(Int(8));
  REQUIRE(ap.size() == 8);
  for (std::size_t r = 0; r < 8; ++r) {
    CHECK(ap[r] % 8 == Int(static_cast<long long>(r)));
    CHECK(s.contains(ap[r]));
    if (ap[r] >= 8) CHECK_FALSE(s.contains(ap[r] - 8));
  }
}

TEST_CASE("frobenius numbers and genus") {
  CHECK(NumericalSemigroup(gens({5, 6, 7, 8})).frobenius_number() == 9);
  CHECK(NumericalSemigroup(gens({2, 3})).frobenius_number() == 1);
  CHECK(NumericalSemigroup(gens({1})).frobenius_number() == -1);
  CHECK(NumericalSemigroup(gens({6, 8, 17, 19})).frobenius_number() == 21);
  CHECK(NumericalSemigroup(gens({5, 6, 7, 8})).genus() == 5);
  CHECK(NumericalSemigroup(gens({1})).genus() == 0);
}

TEST_CASE("symmetry") {
  CHECK(NumericalSemigroup(gens({5, 6, 7, 8})).is_symmetric());
  CHECK(NumericalSemigroup(gens({2, 3})).is_symmetric());
  CHECK(NumericalSemigroup(gens({15, 16, 81, 82, 83, 84})).is_symmetric());
  CHECK_FALSE(NumericalSemigroup(gens({6, 8, 17, 19})).is_symmetric());
  CHECK(NumericalSemigroup(gens({1})).is_symmetric());
}

TEST_CASE("symmetry matches the genus count") {
  std::mt19937_64 rng(31);
  int seen = 0;
  while (seen < 40) {
    std::vector<Int> a;
    for (int k = 0; k < 3; ++k) a.push_back(Int(2 + rng() % 40));
    if (vector_gcd(a) != 1) continue;
    ++seen;
    NumericalSemigroup s(a);
    Int f = s.frobenius_number();
    if (f < 0) continue;
    // Symmetric iff the gaps are exactly half of [0, F].
    bool sym = 2 * Int(s.genus()) == f + 1;
    CHECK(sym == s.is_symmetric());
  }
}

TEST_CASE("membership agrees with the naive DP oracle") {
  std::mt19937_64 rng(37);
  int seen = 0;
  while (seen < 25) {
    std::vector<Int> a;
    for (int k = 0; k < 4; ++k) a.push_back(Int(2 + rng() % 50));
    if (vector_gcd(a) != 1) continue;
    ++seen;
    NumericalSemigroup s(a);
    Int hi = s.frobenius_number() + 2 * *std::max_element(a.begin(), a.end());
    for (Int b = 0; b <= hi; ++b)
      CHECK(s.contains(b) == oracles::dp_contains(a, b));
  }
}

TEST_CASE("monoid membership without the gcd-1 assumption") {
  CHECK(monoid_contains(gens({4, 6}), Int(10)));
  CHECK_FALSE(monoid_contains(gens({4, 6}), Int(7)));
  CHECK(monoid_contains(gens({4, 6}), Int(0)));
  CHECK_FALSE(monoid_contains(gens({4, 6}), Int(2)));
}

TEST_CASE("critical exponents") {
  CHECK(critical_exponents(gens({6, 8, 17, 19})).c == gens({4, 3, 2, 2}));
  CHECK(critical_exponents(gens({25, 30, 57, 76})).c == gens({6, 5, 4, 3}));
  CHECK(critical_exponents(gens({2, 3})).c == gens({3, 2}));
  CHECK(critical_exponents(gens({1, 1})).c == gens({1, 1}));
  CHECK_THROWS(critical_exponents(gens({2, 4})));
}

TEST_CASE("critical exponent minimality via restricted fibers") {
  std::mt19937_64 rng(41);
  int seen = 0;
  while (seen < 20) {
    std::vector<Int> a;
    for (int k = 0; k < 4; ++k) a.push_back(Int(2 + rng() % 40));
    if (vector_gcd(a) != 1) continue;
    ++seen;
    auto c = critical_exponents(a).c;
    for (std::size_t i = 0; i < 4; ++i) {
      // c_i a_i has a representation avoiding i; (c_i - 1) a_i has none.
      auto avoid_i = [&](const Int& b) {
        for (const Expo& u : fiber(a, b))
          if (u[i] == 0) return true;
        return false;
      };
      CHECK(avoid_i(c[i] * a[i]));
      if (c[i] > 1) CHECK_FALSE(avoid_i((c[i] - 1) * a[i]));
    }
  }
}

TEST_CASE("fibers") {
  auto f36 = fiber(gens({6, 8, 17, 19}), Int(36));
  REQUIRE(f36.size() == 3);
  CHECK(f36[0] == Expo{Int(0), Int(0), Int(1), Int(1)});
  CHECK(f36[1] == Expo{Int(2), Int(3), Int(0), Int(0)});
  CHECK(f36[2] == Expo{Int(6), Int(0), Int(0), Int(0)});

  auto f165 = fiber(gens({15, 16, 81, 82, 83, 84}), Int(165));
  auto has = [&](std::vector<long long> v) {
    Expo u(v.begin(), v.end());
    return std::find(f165.begin(), f165.end(), u) != f165.end();
  };
  CHECK(has({11, 0, 0, 0, 0, 0}));
  CHECK(has({0, 0, 1, 0, 0, 1}));
  CHECK(has({0, 0, 0, 1, 1, 0}));

  CHECK(fiber(gens({6, 8, 17, 19}), Int(6)) ==
        std::vector<Expo>{Expo{Int(1), Int(0), Int(0), Int(0)}});
  CHECK(fiber(gens({6, 8, 17, 19}), Int(7)).empty());
  CHECK(fiber(gens({2, 3}), Int(0)) == std::vector<Expo>{Expo{Int(0), Int(0)}});
}

TEST_CASE("fiber members satisfy the degree equation and are sorted") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    std::vector<Int> a;
    for (int k = 0; k < 4; ++k) a.push_back(Int(2 + rng() % 25));
    Int b = Int(rng() % 120);
    auto f = fiber(a, b);
    CHECK(std::is_sorted(f.begin(), f.end(), lex_less));
    for (const Expo& u : f) {
      Int s = 0;
      for (std::size_t i = 0; i < 4; ++i) s += a[i] * u[i];
      CHECK(s == b);
    }
    // Monotone under adding a generator.
    std::vector<Int> a2 = a;
    a2.push_back(Int(2 + rng() % 25));
    CHECK(fiber(a2, b).size() >= f.size());
  }
}
