// qsalg: verification and kernel CLI.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsalg/suites.hpp"

using namespace qsalg;
using nlohmann::ordered_json;

namespace {

constexpr int kFailed = 1;
constexpr int kUsage = 2;

Scenario load_scenario(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

std::optional<int> parse_n(const std::string &s) {
  if (s.empty() || s == "symbolic")
    return std::nullopt;
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != s.size() || v < 1)
    throw CLI::ValidationError("--n", "expected a positive integer or 'symbolic'");
  return v;
}

void emit(const std::vector<CheckRecord> &recs, const std::string &suite, const std::string &scenario,
          const std::string &format, bool timings) {
  if (format == "json") {
    ordered_json j;
    j["suite"] = suite;
    j["scenario"] = scenario.empty() ? nullptr : ordered_json(scenario);
    j["checks"] = ordered_json::array();
    for (const auto &r : recs) {
      ordered_json c;
      c["name"] = r.name;
      c["anchor"] = r.anchor;
      c["status"] = r.pass ? "pass" : "fail";
      if (!r.pass)
        c["residual"] = r.residual;
      // wall time breaks byte-identical output, so it is opt-in
      if (timings)
        c["ms"] = r.ms;
      j["checks"].push_back(c);
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::size_t failed = 0;
  for (const auto &r : recs) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " [" << r.anchor << "]";
    if (timings) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(1);
      ms << r.ms;
      std::cout << " " << ms.str() << " ms";
    }
    if (!r.pass) {
      std::cout << " :: " << r.residual;
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << recs.size() - failed << "/" << recs.size() << " checks passed\n";
}

std::string suite_list() {
  std::string s = "suites:\n";
  for (const auto &i : suite_registry())
    s += "  " + i.name + std::string(i.name.size() < 14 ? 14 - i.name.size() : 1, ' ') + i.summary + "\n";
  return s;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact verification of quasi-solvable matrix operators"};
  app.require_subcommand(1);
  app.footer(suite_list());

  std::string suite, family, n_text, scenario_path, format = "text";
  std::optional<int> degree_bound;
  bool timings = false;
  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--family", family, "q2 or osp22")->check(CLI::IsMember({"q2", "osp22"}));
  verify->add_option("--n", n_text, "integer N or 'symbolic'");
  verify->add_option("--scenario", scenario_path, "scenario file");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--degree-bound", degree_bound, "kernel degree bound")->check(CLI::NonNegativeNumber);
  verify->add_flag("--timings", timings, "print per-check wall time");

  std::string kscenario;
  int kbound = -1;
  auto *kernel = app.add_subcommand("kernel", "polynomial kernel of the supercharge of a scenario");
  kernel->add_option("--scenario", kscenario, "scenario file")->required();
  kernel->add_option("--degree-bound", kbound, "largest polynomial degree")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*kernel) {
      Scenario sc = load_scenario(kscenario);
      Charge ch = suites::scenario_charge(sc);
      int N = sc.N.value_or(1);
      int bound = kbound >= 0 ? kbound : sc.degree_bound.value_or(default_degree_bound(N, osp_module(N)));
      auto basis = polynomial_kernel(ch.minus, bound);
      std::cout << "kernel dimension " << basis.size() << " (degree <= " << bound << ")\n";
      for (const auto &v : basis)
        std::cout << v.str() << "\n";
      return 0;
    }

    SuiteOptions opt;
    if (!family.empty())
      opt.family = family;
    opt.n = parse_n(n_text);
    opt.degree_bound = degree_bound;
    std::vector<Check> checks;
    if (!scenario_path.empty()) {
      Scenario sc = load_scenario(scenario_path);
      if (opt.n && !sc.N)
        sc.N = opt.n;
      if (opt.family && !sc.family)
        sc.family = opt.family;
      checks = scenario_checks(suite, sc, degree_bound);
    } else {
      const SuiteInfo *info = find_suite(suite);
      if (!info) {
        std::cerr << "unknown suite '" << suite << "'\n" << suite_list();
        return kUsage;
      }
      checks = info->build(opt);
    }
    auto recs = run_checks(checks, thread_cap());
    emit(recs, suite, scenario_path, format, timings);
    for (const auto &r : recs)
      if (!r.pass)
        return kFailed;
    return 0;
  } catch (const ScenarioError &e) {
    std::cerr << (scenario_path.empty() ? kscenario : scenario_path) << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
