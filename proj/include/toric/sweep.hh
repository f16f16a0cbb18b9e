#pragma once

// Deterministic random quadruple sampling and batch classification.

#include <cstdint>
#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/classify4.hh"
#include "toric/semigroup.hh"

namespace toric {

namespace detail {

// Uniform draw in [0, range) by rejection, byte-stable across platforms.
inline std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t range) {
  std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % range;
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return r % range;
  }
}

}  // namespace detail

// count quadruples with entries uniform in [min, max], resampled until
// gcd = 1. The sequence is a pure function of the seed.
inline std::vector<std::vector<Int>> sample_quadruples(std::uint64_t seed,
                                                       std::int64_t min,
                                                       std::int64_t max,
                                                       std::size_t count) {
  if (min < 1 || max < min) throw std::invalid_argument("bad sampling range");
  std::mt19937_64 rng(seed);
  std::uint64_t range = static_cast<std::uint64_t>(max - min + 1);
  std::vector<std::vector<Int>> out;
  while (out.size() < count) {
    std::vector<Int> a;
    for (int k = 0; k < 4; ++k)
      a.push_back(Int(min + static_cast<std::int64_t>(
                                detail::bounded_uniform(rng, range))));
    if (vector_gcd(a) == 1) out.push_back(std::move(a));
  }
  return out;
}

// Classify every quadruple and return one canonical JSON line each, in
// input order. Instances run in parallel; output order is preserved.
inline std::vector<std::string> sweep_classify(
    const std::vector<std::vector<Int>>& instances) {
  std::vector<std::future<std::string>> jobs;
  for (const auto& a : instances)
    jobs.push_back(std::async(std::launch::async, [a] {
      return report_to_json(classify(a)).dump();
    }));
  std::vector<std::string> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace toric
