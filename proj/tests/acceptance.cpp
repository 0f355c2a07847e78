// Runs every acceptance criterion once and prints one line per criterion.
// Exit status is nonzero if any criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qsalg/suites.hpp"

using namespace qsalg;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::vector<std::string> suites;
  SuiteOptions options;
  std::function<std::optional<std::string>()> extra;
};

/// Brute substitution of the family into the N = 2 constraints, plus the
/// full closure applied to concrete vectors.
std::optional<std::string> n2_family_oracle() {
  for (int x : {1, 2, 3, -1, -5}) {
    Rational X(x);
    for (const auto &v : oracle::n2_constraints_at(oracle::A_family(X), oracle::Q_family(X), oracle::alpha_family(X)))
      if (v != Rational(0))
        return "brute substitution nonzero at z = " + std::to_string(x) + ": " + v.str();
  }
  RatFunc z = RatFunc::z();
  GaugeData g{z * z, -z, 2};
  RatFunc alpha = RatFunc(2) / z;
  auto C1 = n2_closure_C1(g, alpha);
  if (!C1)
    return std::string("C1 not constant");
  for (const auto &e : C1->entries())
    if (!e.is_zero())
      return "C1 entry " + e.str();
  Grid<ParamPoly> C0(2);
  C0(0, 0) = C0(1, 1) = ParamPoly(Rational(-2, 3));
  auto [Hm, Hp] = build_n2_closure_pair(g, alpha, C0);
  Charge ch = build_charge({ChargeFamily::Osp, alpha, {}}, g);
  MatrixDiffOp C0op = ConstantMatrixSet{{C0}}.as_operator(0), C1op = ConstantMatrixSet{{*C1}}.as_operator(0);
  for (const auto &f : oracle::probe_vectors()) {
    auto [plus, minus] = oracle::nf2_by_action(ch, g.A, Hm, Hp, C0op, C1op, f);
    if (!oracle::all_zero(plus) || !oracle::all_zero(minus))
      return std::string("closure applied to a probe vector is nonzero");
  }
  return std::nullopt;
}

} // namespace

int main() {
  SuiteOptions osp;
  osp.family = "osp22";
  std::vector<Criterion> crit{
      {1, "q(2) relations, s symbolic", 10, {"q2-relations"}, {}, {}},
      {2, "q(2) identities, s symbolic", 5, {"q2-identities"}, {}, {}},
      {3, "osp(2/2) relations, N symbolic", 10, {"osp-relations"}, {}, {}},
      {4, "coefficient tables", 30, {"tables"}, {}, {}},
      {5, "dictionary round trip", 30, {"dictionary"}, {}, {}},
      {6, "module invariance and solvable flags", 60, {"invariance"}, {}, {}},
      {7, "type-A intertwining N = 1..4", 120, {"intertwine"}, {}, {}},
      {8, "type-B reduction N = 3..5", 30, {"typeB"}, {}, {}},
      {9, "osp charge kernel and extension vector", 30, {"kernel"}, {}, {}},
      {10, "osp N = 1, 2 solved systems", 120, {"solutions"}, {}, {}},
      {11, "N = 1 closure equivalence", 30, {"closure-n1"}, {}, {}},
      {12, "N = 2 closure on A = z^2, alpha = 2/z, Q = -z", 60, {"closure-n2"}, {}, n2_family_oracle},
      {13, "negative controls", 10, {"negative"}, {}, {}},
  };
  unsigned threads = thread_cap();
  int failed = 0;
  for (const auto &c : crit) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> why;
    std::size_t nchecks = 0;
    for (const auto &name : c.suites) {
      const SuiteInfo *s = find_suite(name);
      if (!s) {
        why.push_back("missing suite " + name);
        continue;
      }
      for (const auto &r : run_checks(s->build(c.options), threads)) {
        ++nchecks;
        if (!r.pass)
          why.push_back(r.name + ": " + r.residual);
      }
    }
    if (c.extra)
      if (auto e = c.extra())
        why.push_back("oracle: " + *e);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.limit_s)
      why.push_back("runtime " + std::to_string(secs) + " s over the limit");
    bool ok = why.empty() && nchecks > 0;
    if (!ok)
      ++failed;
    std::printf("[%s] %2d %s (%zu checks, %.2f s < %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), nchecks, secs,
                c.limit_s);
    for (const auto &w : why)
      std::printf("       %s\n", w.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(crit.size()) - failed, crit.size());
  return failed ? 1 : 0;
}
