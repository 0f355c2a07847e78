#include <gtest/gtest.h>

#include <set>

#include "qsalg/suites.hpp"

using namespace qsalg;

namespace {

std::pair<int, int> error_position(const std::string &text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError &e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

} // namespace

TEST(Parser, Values) {
  Scenario sc = parse_scenario("# comment\ntask = closure\nN = 2\nparams = a, b\nA = (z + a)^2 / 3\nQ = -z*b # tail\n");
  EXPECT_EQ(sc.task, "closure");
  EXPECT_EQ(sc.N, 2);
  EXPECT_EQ(sc.params, (std::vector<std::string>{"a", "b"}));
  RatFunc z = RatFunc::z(), a(param("a")), b(param("b"));
  EXPECT_EQ(sc.get("A"), (z + a) * (z + a) / RatFunc(3));
  EXPECT_EQ(sc.get("Q"), -(z * b));
  EXPECT_THROW(sc.get("alpha"), Error);
}

TEST(Parser, ConstantsAndSymbolicN) {
  Scenario sc = parse_scenario("N = symbolic\nc = 1/3\nf = z\n");
  EXPECT_TRUE(sc.symbolic_N);
  EXPECT_FALSE(sc.N.has_value());
  EXPECT_EQ(sc.constant("c"), ParamPoly(Rational(1, 3)));
  EXPECT_THROW(sc.constant("f"), Error);
}

TEST(Parser, LineEndingsAndBom) {
  Scenario sc = parse_scenario("\xEF\xBB\xBFtask = kernel\r\nalpha = 2*z\r\n");
  EXPECT_EQ(sc.task, "kernel");
  EXPECT_EQ(sc.get("alpha"), RatFunc::z().scaled(2));
}

TEST(Parser, ErrorPositions) {
  EXPECT_EQ(error_position("A = z^^2\n"), std::make_pair(1, 7));
  EXPECT_EQ(error_position("task = closure\nQ = 3*q\n"), std::make_pair(2, 7));
  EXPECT_EQ(error_position("A = (z + 1\n"), std::make_pair(1, 11));
  EXPECT_EQ(error_position("\n\njust words\n").first, 3);
  EXPECT_EQ(error_position("N = 0\n"), std::make_pair(1, 5));
  EXPECT_EQ(error_position("family = su3\n"), std::make_pair(1, 10));
  EXPECT_EQ(error_position("params = a, 2b\n").first, 1);
}

TEST(Parser, DivisionByZero) { EXPECT_EQ(error_position("A = 1/(z - z)\n"), std::make_pair(1, 6)); }

TEST(Scenario, ChecksFromFile) {
  Scenario sc = parse_scenario("task = closure\nfamily = osp22\nN = 2\nA = z^2\nalpha = 2/z\nQ = -z\n");
  auto rs = run_checks(scenario_checks("closure", sc, std::nullopt), 1);
  ASSERT_FALSE(rs.empty());
  for (const auto &r : rs)
    EXPECT_TRUE(r.pass) << r.name << ": " << r.residual;
}

TEST(Scenario, FailingInstanceReportsResidual) {
  Scenario sc = parse_scenario("task = closure\nfamily = osp22\nN = 2\nA = z^2\nalpha = 2/z\nQ = 1 - z\n");
  auto rs = run_checks(scenario_checks("closure", sc, std::nullopt), 1);
  bool failed = false;
  for (const auto &r : rs)
    if (!r.pass) {
      failed = true;
      EXPECT_FALSE(r.residual.empty());
    }
  EXPECT_TRUE(failed);
}

TEST(Scenario, TaskMismatchAndUnknownTask) {
  Scenario sc = parse_scenario("task = kernel\nalpha = 1\nN = 1\n");
  EXPECT_THROW(scenario_checks("intertwine", sc, std::nullopt), Error);
  EXPECT_THROW(scenario_checks("frobnicate", parse_scenario("N = 1\n"), std::nullopt), Error);
}

TEST(Registry, NamesAreUniqueAndFindable) {
  std::set<std::string> names;
  for (const auto &s : suite_registry()) {
    EXPECT_TRUE(names.insert(s.name).second) << s.name;
    EXPECT_EQ(find_suite(s.name), &s);
  }
  EXPECT_EQ(find_suite("nope"), nullptr);
}

TEST(Runner, ThreadedRunKeepsOrderAndResults) {
  const SuiteInfo *s = find_suite("intertwine");
  ASSERT_NE(s, nullptr);
  auto checks = s->build(SuiteOptions{});
  auto serial = run_checks(checks, 1), threaded = run_checks(checks, 3);
  ASSERT_EQ(serial.size(), threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].name, threaded[i].name);
    EXPECT_EQ(serial[i].pass, threaded[i].pass);
    EXPECT_EQ(serial[i].residual, threaded[i].residual);
  }
}

TEST(Runner, ExceptionsBecomeFailures) {
  std::vector<Check> checks{detail::make_check("throws", "x", []() -> std::optional<std::string> {
    throw Error("boom");
  })};
  auto r = run_checks(checks, 1);
  ASSERT_EQ(r.size(), 1U);
  EXPECT_FALSE(r[0].pass);
}
