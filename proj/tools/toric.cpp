// Command line front end: single-instance analyses, file-driven queries on
// general pure difference binomial ideals, and batch sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toric/classify4.hh"
#include "toric/critical.hh"
#include "toric/edgeideal.hh"
#include "toric/exponents.hh"
#include "toric/fibergraph.hh"
#include "toric/graver.hh"
#include "toric/grobner.hh"
#include "toric/intlat.hh"
#include "toric/semigroup.hh"
#include "toric/sweep.hh"

namespace {

using nlohmann::json;
using namespace toric;

std::vector<Int> to_ints(const std::vector<std::int64_t>& v) {
  return std::vector<Int>(v.begin(), v.end());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// The ideal under query: toric from generators, or a general one from a
// file.
BinomialIdeal load_ideal(const std::vector<std::int64_t>& gens,
                         const std::string& ideal_file) {
  if (!ideal_file.empty()) {
    IdealFile f = parse_ideal_file(read_file(ideal_file));
    return BinomialIdeal(f.n, f.gens, finest_grading(f.gens, f.n), false);
  }
  if (gens.empty()) throw std::runtime_error("need generators or --ideal");
  return toric_ideal(to_ints(gens));
}

json binomials_json(const std::vector<Binomial>& v) {
  json out = json::array();
  for (const Binomial& f : v) out.push_back(binomial_to_string(f));
  return out;
}

void print_binomials(const std::string& head, const std::vector<Binomial>& v) {
  std::cout << head << " (" << v.size() << "):\n";
  for (const Binomial& f : v) std::cout << "  " << binomial_to_string(f) << "\n";
}

int cmd_classify(const std::vector<std::int64_t>& gens, bool as_json) {
  ClassificationReport rep = classify(to_ints(gens));
  if (as_json) {
    std::cout << report_to_json(rep).dump() << "\n";
    return 0;
  }
  std::cout << "case: " << rep.case_label << "\n";
  std::cout << "c:";
  for (const Int& x : rep.c) std::cout << " " << x;
  std::cout << "\nmu(I_A) = " << rep.mu_ia << ", mu(C_A) = " << rep.mu_ca << "\n";
  print_binomials("S", rep.s);
  print_binomials("I", rep.i);
  print_binomials("R", rep.r);
  std::cout << "unique: " << (rep.unique ? "yes" : "no") << "\n"
            << "gorenstein: " << (rep.gorenstein ? "yes" : "no") << "\n"
            << "complete intersection: "
            << (rep.complete_intersection ? "yes" : "no") << "\n";
  return 0;
}

int cmd_mingens(const std::vector<std::int64_t>& gens,
                const std::string& ideal_file, bool as_json) {
  BinomialIdeal ideal = load_ideal(gens, ideal_file);
  BettiTable t = minimal_generating_set(ideal);
  if (as_json) {
    json out;
    out["mu"] = t.mu();
    json degs = json::array();
    for (const BettiEntry& e : t.entries) {
      json row;
      row["degree"] = json::array();
      for (const Int& d : e.degree) row["degree"].push_back(detail::json_int(d));
      row["count"] = e.generators.size();
      row["generators"] = binomials_json(e.generators);
      degs.push_back(row);
    }
    out["degrees"] = degs;
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "mu = " << t.mu() << "\n";
  for (const BettiEntry& e : t.entries) {
    std::cout << "degree";
    for (const Int& d : e.degree) std::cout << " " << d;
    std::cout << ":\n";
    for (const Binomial& f : e.generators)
      std::cout << "  " << binomial_to_string(f) << "\n";
  }
  return 0;
}

int cmd_critical(const std::vector<std::int64_t>& gens, bool as_json) {
  std::vector<Int> a = to_ints(gens);
  CriticalExponents c = critical_exponents(a);
  json out;
  out["c"] = json::array();
  for (const Int& x : c.c) out["c"].push_back(detail::json_int(x));
  json per = json::array();
  if (!as_json) {
    std::cout << "c:";
    for (const Int& x : c.c) std::cout << " " << x;
    std::cout << "\n";
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto bins = critical_binomials(a, i, c);
    if (as_json)
      per.push_back(binomials_json(bins));
    else
      print_binomials("critical for x" + std::to_string(i + 1), bins);
  }
  if (a.size() == 4) {
    CriticalCase cc = classify_critical_case(a);
    bool cu = critical_unique(cc, toric_ideal(a));
    if (as_json) {
      out["case"] = cc.label;
      out["mu_CA"] = cc.mu_ca;
      out["critical_unique"] = cu;
    } else {
      std::cout << "case: " << cc.label << ", mu(C_A) = " << cc.mu_ca
                << ", unique: " << (cu ? "yes" : "no") << "\n";
    }
  }
  if (as_json) {
    out["critical_binomials"] = per;
    std::cout << out.dump() << "\n";
  }
  return 0;
}

int cmd_circuits(const std::vector<std::int64_t>& gens, bool as_json) {
  std::vector<Int> a = to_ints(gens);
  json rows = json::array();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Binomial f = circuit(a, i, j);
      bool ind = circuit_indispensable(a, i, j);
      if (as_json) {
        json row;
        row["pair"] = {i + 1, j + 1};
        row["binomial"] = binomial_to_string(f);
        row["indispensable"] = ind;
        rows.push_back(row);
      } else {
        std::cout << "(" << i + 1 << "," << j + 1 << "): "
                  << binomial_to_string(f)
                  << (ind ? "  [indispensable]" : "") << "\n";
      }
    }
  if (as_json) std::cout << rows.dump() << "\n";
  return 0;
}

int cmd_graver(const std::vector<std::int64_t>& gens, bool as_json) {
  auto gr = graver_basis(to_ints(gens));
  if (as_json)
    std::cout << binomials_json(gr).dump() << "\n";
  else
    print_binomials("graver", gr);
  return 0;
}

int cmd_fiber(const std::vector<std::int64_t>& gens, std::int64_t degree,
              bool as_json) {
  auto fib = fiber(to_ints(gens), Int(degree));
  if (as_json) {
    json out = json::array();
    for (const Expo& u : fib) out.push_back(monomial_to_string(u));
    std::cout << out.dump() << "\n";
  } else {
    for (const Expo& u : fib) std::cout << monomial_to_string(u) << "\n";
  }
  return 0;
}

int cmd_indisp(const std::vector<std::int64_t>& gens,
               const std::string& ideal_file, const std::string& binomial,
               const std::string& monomial, bool as_json) {
  BinomialIdeal ideal = load_ideal(gens, ideal_file);
  std::string verdict;
  if (!monomial.empty()) {
    Expo u = parse_monomial(monomial, ideal.nvars());
    verdict = indispensable_monomial(ideal, u) ? "yes" : "no";
  } else if (!binomial.empty()) {
    Binomial f = parse_binomial(binomial, ideal.nvars());
    switch (indispensable_binomial(ideal, f)) {
      case Tristate::yes: verdict = "yes"; break;
      case Tristate::no: verdict = "no"; break;
      case Tristate::unknown: verdict = "unknown"; break;
    }
  } else {
    throw std::runtime_error("need --binomial or --monomial");
  }
  if (as_json)
    std::cout << json{{"indispensable", verdict}}.dump() << "\n";
  else
    std::cout << verdict << "\n";
  return 0;
}

int cmd_grading(const std::string& ideal_file, bool as_json) {
  IdealFile f = parse_ideal_file(read_file(ideal_file));
  Grading g = finest_grading(f.gens, f.n);
  if (as_json) {
    json out;
    out["d"] = g.matrix.rows;
    out["positive"] = g.positive;
    json m = json::array();
    for (std::size_t r = 0; r < g.matrix.rows; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < g.matrix.cols; ++c)
        row.push_back(detail::json_int(g.matrix.at(r, c)));
      m.push_back(row);
    }
    out["A"] = m;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "d = " << g.matrix.rows
              << (g.positive ? " (positive)" : " (not positive)") << "\n";
    for (std::size_t r = 0; r < g.matrix.rows; ++r) {
      for (std::size_t c = 0; c < g.matrix.cols; ++c)
        std::cout << (c ? " " : "") << g.matrix.at(r, c);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_membership(const std::vector<std::int64_t>& gens,
                   const std::string& ideal_file, const std::string& binomial,
                   bool as_json) {
  BinomialIdeal ideal = load_ideal(gens, ideal_file);
  Binomial f = parse_binomial(binomial, ideal.nvars());
  bool in = ideal.contains(f);
  if (as_json)
    std::cout << json{{"member", in}}.dump() << "\n";
  else
    std::cout << (in ? "member" : "not a member") << "\n";
  return 0;
}

int cmd_edge_ideal(const std::string& graph_file, bool as_json) {
  SimpleGraph g = parse_graph_file(read_file(graph_file));
  BinomialIdeal j = edge_ideal(g);
  bool unique = verify_unique_generation(g);
  if (as_json) {
    json out;
    out["n"] = g.n;
    out["edges"] = g.edges.size();
    out["generators"] = binomials_json(j.generators());
    out["unique"] = unique;
    std::cout << out.dump() << "\n";
  } else {
    print_binomials("edge ideal generators", j.generators());
    std::cout << "unique generation: " << (unique ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_sweep(std::int64_t min, std::int64_t max, std::size_t count,
              std::uint64_t seed, const std::string& out_path) {
  auto instances = sample_quadruples(seed, min, max, count);
  auto lines = sweep_classify(instances);
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  for (const std::string& l : lines) out << l << "\n";
  std::cout << "wrote " << lines.size() << " reports to " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toric ideal toolkit for monomial curves"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::vector<std::int64_t> gens;
  std::string ideal_file, graph_file, binomial, monomial;
  std::int64_t degree = 0;
  std::int64_t smin = 2, smax = 60;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::string out_path = "sweep.jsonl";

  auto add_gens = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("generators", gens, "semigroup generators");
    if (required) opt->required();
    return opt;
  };

  auto* c_classify = app.add_subcommand("classify", "full four-variable report");
  add_gens(c_classify, true)->expected(4);
  auto* c_mingens = app.add_subcommand("mingens", "minimal generating set");
  add_gens(c_mingens, false);
  c_mingens->add_option("--ideal", ideal_file, "ideal file");
  auto* c_critical = app.add_subcommand("critical", "critical binomials");
  add_gens(c_critical, true);
  auto* c_circuits = app.add_subcommand("circuits", "circuits and indispensability");
  add_gens(c_circuits, true);
  auto* c_graver = app.add_subcommand("graver", "Graver basis");
  add_gens(c_graver, true);
  auto* c_fiber = app.add_subcommand("fiber", "fiber of a degree");
  add_gens(c_fiber, true);
  c_fiber->add_option("--degree", degree, "target degree")->required();
  auto* c_indisp = app.add_subcommand("indisp", "indispensability tests");
  add_gens(c_indisp, false);
  c_indisp->add_option("--ideal", ideal_file, "ideal file");
  c_indisp->add_option("--binomial", binomial, "binomial to test");
  c_indisp->add_option("--monomial", monomial, "monomial to test");
  auto* c_grading = app.add_subcommand("grading", "finest grading of an ideal file");
  c_grading->add_option("--ideal", ideal_file, "ideal file")->required();
  auto* c_membership = app.add_subcommand("membership", "ideal membership");
  add_gens(c_membership, false);
  c_membership->add_option("--ideal", ideal_file, "ideal file");
  c_membership->add_option("--binomial", binomial, "binomial to test")->required();
  auto* c_edge = app.add_subcommand("edge-ideal", "binomial edge ideal of a graph");
  c_edge->add_option("--graph", graph_file, "graph file")->required();
  auto* c_sweep = app.add_subcommand("sweep", "randomized batch classification");
  c_sweep->add_option("--min", smin, "smallest generator");
  c_sweep->add_option("--max", smax, "largest generator");
  c_sweep->add_option("--count", count, "number of instances");
  c_sweep->add_option("--seed", seed, "PRNG seed");
  c_sweep->add_option("--out", out_path, "output JSON-lines file");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_classify->parsed()) return cmd_classify(gens, as_json);
    if (c_mingens->parsed()) return cmd_mingens(gens, ideal_file, as_json);
    if (c_critical->parsed()) return cmd_critical(gens, as_json);
    if (c_circuits->parsed()) return cmd_circuits(gens, as_json);
    if (c_graver->parsed()) return cmd_graver(gens, as_json);
    if (c_fiber->parsed()) return cmd_fiber(gens, degree, as_json);
    if (c_indisp->parsed())
      return cmd_indisp(gens, ideal_file, binomial, monomial, as_json);
    if (c_grading->parsed()) return cmd_grading(ideal_file, as_json);
    if (c_membership->parsed())
      return cmd_membership(gens, ideal_file, binomial, as_json);
    if (c_edge->parsed()) return cmd_edge_ideal(graph_file, as_json);
    if (c_sweep->parsed()) return cmd_sweep(smin, smax, count, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
