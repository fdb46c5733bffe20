#include <gtest/gtest.h>

#include "fcg/verify.hpp"

using namespace fcg;

TEST(Verify, EverySuitePassesAtGradingThree) {
  for (const auto& suite : suite_names()) {
    const auto r = run_suite(suite, {3, 1, 1});
    EXPECT_TRUE(r.passed()) << report_to_text(r, false);
    EXPECT_FALSE(r.checks.empty()) << suite;
  }
}

TEST(Verify, UnknownSuiteAndBadBound) {
  EXPECT_THROW(run_suite("no-such-suite", {}), std::invalid_argument);
  EXPECT_THROW(run_suite("forest", {-1, 1, 1}), std::invalid_argument);
}

TEST(Verify, ReportsAreDeterministic) {
  const auto a = report_to_json(run_suite("coassoc", {3, 9, 1}), false);
  const auto b = report_to_json(run_suite("coassoc", {3, 9, 2}), false);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["seed"], 9);
  EXPECT_FALSE(a["checks"][0].contains("seconds"));
  const auto timed = report_to_json(run_suite("forest", {3, 1, 1}), true);
  EXPECT_TRUE(timed["checks"][0].contains("seconds"));
}

TEST(Verify, FailuresCarryTheCounterexample) {
  SuiteReport r{"demo", 2, 1, {}};
  r.checks.push_back({"ok", true, "fine", std::nullopt, 0});
  r.checks.push_back({"bad", false, "broken", nlohmann::json{{"n", 1}, {"framing", {0}}}, 0});
  EXPECT_FALSE(r.passed());
  const auto j = report_to_json(r, false);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["checks"][1]["counterexample"]["n"], 1);
  const auto text = report_to_text(r, false);
  EXPECT_NE(text.find("FAIL bad: broken"), std::string::npos);
  EXPECT_NE(text.find("counterexample: {"), std::string::npos);
  const auto csv = report_to_csv(r, false);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "suite,check,passed,detail,counterexample");
}

TEST(Verify, PrimitiveWitnessAtGradingFour) {
  LandoWorkspace ws(5);
  const auto w = pn4_witness(ws);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->graphs.size(), 4u);
  for (const auto& k : w->graphs) {
    const auto g = decode(k);
    EXPECT_TRUE(g.is_connected());
    EXPECT_TRUE(g.edge_count() == 3 || g.edge_count() == 4);
  }
  EXPECT_TRUE(check_pn_tree_action(5, ws).passed);
}
