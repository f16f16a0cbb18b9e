#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toric/classify4.hh"
#include "toric/sweep.hh"

using namespace toric;

namespace {

std::vector<Int> gens(std::vector<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

Binomial pb(const std::string& s, std::size_t n) { return parse_binomial(s, n); }

bool has(const std::vector<Binomial>& g, const Binomial& f) {
  return std::any_of(g.begin(), g.end(),
                     [&](const Binomial& h) { return same_binomial(f, h); });
}

}  // namespace

TEST_CASE("decomposition of (6, 8, 17, 19)") {
  Decomposition d = decompose_minimal_system(gens({6, 8, 17, 19}));
  CHECK(d.cc.label == "4b");
  CHECK(d.s.size() == 3);
  CHECK(has(d.s, pb("x1^4 - x2^3", 4)));
  CHECK(d.i.size() == 2);
  CHECK(has(d.i, pb("x1*x4 - x2*x3", 4)));
  CHECK(has(d.i, pb("x1^3*x3 - x2^2*x4", 4)));
  REQUIRE(d.r.size() == 1);
  CHECK(same_binomial(d.r[0], pb("x1^2*x2^3 - x3*x4", 4)));
  CHECK(d.s.size() + d.i.size() + d.r.size() == d.betti.mu());
  CHECK(d.betti.mu() == 6);
}

TEST_CASE("decomposition of (25, 30, 57, 76)") {
  Decomposition d = decompose_minimal_system(gens({25, 30, 57, 76}));
  CHECK(d.cc.label == "2c");
  CHECK(d.s.size() == 2);
  CHECK(d.i.size() == 5);
  REQUIRE(d.r.size() == 1);
  CHECK(same_binomial(d.r[0], pb("x1^3*x2^7 - x3*x4^3", 4)));
  CHECK(d.betti.mu() == 8);
}

TEST_CASE("case-1 instances have empty remainder") {
  Decomposition d = decompose_minimal_system(gens({5, 6, 7, 8}));
  CHECK(d.cc.label == "1");
  CHECK(d.s.size() == 4);
  CHECK(d.r.empty());
  CHECK(d.s.size() + d.i.size() == d.betti.mu());
}

TEST_CASE("classification reports") {
  ClassificationReport r1 = classify(gens({6, 8, 17, 19}));
  CHECK(r1.case_label == "4b");
  CHECK(r1.c == gens({4, 3, 2, 2}));
  CHECK(r1.mu_ia == 6);
  CHECK(r1.mu_ca == 3);
  CHECK_FALSE(r1.unique);
  CHECK_FALSE(r1.gorenstein);
  CHECK_FALSE(r1.complete_intersection);
  CHECK(r1.unique == r1.exact_unique_crosscheck);
  // Betti degrees of the worked example.
  std::vector<std::pair<Int, std::size_t>> expect = {
      {Int(24), 1}, {Int(25), 1}, {Int(34), 1},
      {Int(35), 1}, {Int(36), 1}, {Int(38), 1}};
  CHECK(r1.betti == expect);

  ClassificationReport r2 = classify(gens({25, 30, 57, 76}));
  CHECK(r2.case_label == "2c");
  CHECK(r2.mu_ia == 8);
  CHECK_FALSE(r2.unique);
  CHECK(r2.unique == r2.exact_unique_crosscheck);

  ClassificationReport r3 = classify(gens({5, 6, 7, 8}));
  CHECK(r3.unique);
  CHECK(r3.gorenstein);
  CHECK_FALSE(r3.complete_intersection);
  CHECK(r3.mu_ia == 5);
  CHECK(r3.unique == r3.exact_unique_crosscheck);

  CHECK_THROWS(classify(gens({2, 4, 6, 8})));
  CHECK_THROWS(classify(gens({2, 3})));
}

TEST_CASE("cyclic critical pattern") {
  CHECK(verify_bresinsky_form(gens({5, 6, 7, 8})) == BresinskyForm::matches);
  CHECK(verify_bresinsky_form(gens({6, 8, 17, 19})) == BresinskyForm::no_match);
  CHECK(verify_bresinsky_form(gens({25, 30, 57, 76})) == BresinskyForm::no_match);
}

TEST_CASE("json round trip") {
  for (auto a : {gens({6, 8, 17, 19}), gens({25, 30, 57, 76}), gens({5, 6, 7, 8})}) {
    ClassificationReport rep = classify(a);
    nlohmann::json j = report_to_json(rep);
    // Schema fields.
    for (const char* key :
         {"A", "permutation", "c", "case", "S", "I", "R", "mu_IA", "mu_CA",
          "unique", "gorenstein", "complete_intersection", "betti"})
      CHECK(j.contains(key));
    ClassificationReport back = report_from_json(j);
    CHECK(back.a == rep.a);
    CHECK(back.permutation == rep.permutation);
    CHECK(back.c == rep.c);
    CHECK(back.case_label == rep.case_label);
    CHECK(back.s == rep.s);
    CHECK(back.i == rep.i);
    CHECK(back.r == rep.r);
    CHECK(back.mu_ia == rep.mu_ia);
    CHECK(back.mu_ca == rep.mu_ca);
    CHECK(back.unique == rep.unique);
    CHECK(back.gorenstein == rep.gorenstein);
    CHECK(back.complete_intersection == rep.complete_intersection);
    CHECK(back.betti == rep.betti);
    // Serialization is canonical: dumping twice is byte identical.
    CHECK(j.dump() == report_to_json(report_from_json(j)).dump());
  }
}

TEST_CASE("serialized permutation is one-based") {
  nlohmann::json j = report_to_json(classify(gens({6, 8, 17, 19})));
  for (std::int64_t p : j.at("permutation").get<std::vector<std::int64_t>>()) {
    CHECK(p >= 1);
    CHECK(p <= 4);
  }
}

TEST_CASE("sweep sampling is deterministic and respects the range") {
  auto s1 = sample_quadruples(42, 2, 60, 25);
  auto s2 = sample_quadruples(42, 2, 60, 25);
  CHECK(s1 == s2);
  auto s3 = sample_quadruples(43, 2, 60, 25);
  CHECK(s1 != s3);
  for (const auto& a : s1) {
    REQUIRE(a.size() == 4);
    CHECK(vector_gcd(a) == 1);
    for (const Int& x : a) {
      CHECK(x >= 2);
      CHECK(x <= 60);
    }
  }
  CHECK_THROWS(sample_quadruples(1, 0, 60, 1));
  CHECK_THROWS(sample_quadruples(1, 10, 5, 1));
}

TEST_CASE("sweep classification lines parse back to the schema") {
  auto inst = sample_quadruples(7, 3, 25, 6);
  auto lines = sweep_classify(inst);
  REQUIRE(lines.size() == inst.size());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    nlohmann::json j = nlohmann::json::parse(lines[k]);
    ClassificationReport rep = report_from_json(j);
    CHECK(rep.a == inst[k]);
    CHECK(rep.s.size() + rep.i.size() + rep.r.size() == rep.mu_ia);
  }
}

TEST_CASE("invariants on a small random batch") {
  std::mt19937_64 rng(71);
  int seen = 0;
  while (seen < 10) {
    std::vector<Int> a;
    for (int k = 0; k < 4; ++k) a.push_back(Int(2 + rng() % 30));
    if (vector_gcd(a) != 1) continue;
    ++seen;
    ClassificationReport rep = classify(a);
    CHECK(rep.unique == rep.exact_unique_crosscheck);
    CHECK(rep.mu_ca <= 4);
    CHECK(rep.mu_ca >= 2);
    CHECK(rep.s.size() == rep.mu_ca);
    CHECK(rep.s.size() + rep.i.size() + rep.r.size() == rep.mu_ia);
    if (rep.case_label == "1" || rep.case_label == "2a" ||
        rep.case_label == "2d" || rep.case_label == "3" ||
        rep.case_label == "4a")
      CHECK(rep.r.empty());
  }
}
