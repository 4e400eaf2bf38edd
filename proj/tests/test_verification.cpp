#include <chrono>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "kident/verification.hpp"

namespace kident {
namespace {

const std::vector<Real> kGrid = {Real(1) / 10, Real(1) / 3, 1, 3, 10};

TEST(CheckIdentity, Examples) {
  const CheckReport r = check_identity(8, kGrid, 1e-10);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.cases, 45);
  EXPECT_LE(r.max_abs_error, 1e-10);
  EXPECT_TRUE(r.consistent());

  const std::vector<Real> one = {1};
  EXPECT_TRUE(check_identity(0, one, 1e-10).passed);
  EXPECT_THROW(check_identity(-1, one, 1e-10), DomainError);
  EXPECT_THROW(check_identity(2, std::vector<Real>{-1}, 1e-10), DomainError);
}

TEST(CheckIdentity, StarvedQuadratureFails) {
  const CheckReport r = check_identity(0, kGrid, 1e-10, Precision{1e-30, 64, 1});
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(std::isinf(r.max_abs_error));
  EXPECT_TRUE(r.consistent());
}

TEST(DerivativeStep, Passes) {
  EXPECT_TRUE(check_derivative_step(0, 1, Real(1e-4)).passed);
  EXPECT_TRUE(check_derivative_step(2, 3, Real(1e-4)).passed);
  for (int n = 0; n <= 4; ++n)
    for (const Real z : {Real(1) / 3, Real(1), Real(3)})
      EXPECT_TRUE(check_derivative_step(n, z, Real(1e-4)).passed) << n;
}

TEST(DerivativeStep, CoarseStepFailsOrWarns) {
  const CheckReport r = check_derivative_step(0, 1, Real(0.3));
  EXPECT_TRUE(!r.passed || !r.notes.empty()) << r.max_abs_error;
}

TEST(DerivativeStep, StepMustStayInDomain) {
  EXPECT_THROW(check_derivative_step(0, Real(0.1), Real(0.2)), DomainError);
  EXPECT_THROW(check_derivative_step(0, 1, Real(0)), DomainError);
}

TEST(InnerAndSwap, Pass) {
  std::vector<Real> t;
  for (int i = 0; i < 10; ++i) t.push_back(Real(2 * i + 1) / 20);
  EXPECT_TRUE(check_inner_identity(kGrid, t, 1e-10).passed);
  EXPECT_TRUE(check_order_swap(kGrid, 1e-10).passed);
}

TEST(Relations, Pass) {
  const CheckReport r = check_relations(10, 1e-10);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.cases, 121);
}

TEST(Audit, OnlyTheSecondIndexAtThreeMismatches) {
  const auto reports = audit_published_tables();
  int expected = 0;
  bool arbitration = false;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.consistent()) << r.name;
    EXPECT_TRUE(r.acceptable()) << r.name;
    if (r.expected_failure) {
      ++expected;
      EXPECT_FALSE(r.passed);
      EXPECT_NE(r.name.find("I_2(3)"), std::string::npos);
    }
    if (r.name.find("arbitration") != std::string::npos) {
      arbitration = true;
      EXPECT_TRUE(r.passed);
      EXPECT_LE(r.max_abs_error, 1e-10);
    }
  }
  EXPECT_EQ(expected, 1);
  EXPECT_TRUE(arbitration);
}

TEST(Invariants, AllPass) {
  for (const auto& r : check_invariants()) EXPECT_TRUE(r.passed) << r.name << " " << r.notes;
}

TEST(Suite, DefaultsAreGreenAndFast) {
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport suite = run_suite(SuiteConfig::defaults());
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(suite.all_acceptable()) << reports_to_text(suite.reports);
  EXPECT_EQ(suite.exit_status(), 0);
  EXPECT_LT(seconds, 60.0);
  bool noted = false;
  for (const auto& r : suite.reports) noted |= r.expected_failure;
  EXPECT_TRUE(noted);
}

TEST(Suite, LooseToleranceStaysGreen) {
  SuiteConfig config = SuiteConfig::defaults();
  config.tol = 1e-2;
  config.n_max = 2;
  EXPECT_TRUE(run_suite(config).all_acceptable());
}

TEST(Suite, RejectsNonPositiveGrid) {
  SuiteConfig config = SuiteConfig::defaults();
  config.z_grid.push_back(-1);
  EXPECT_THROW(config.validate(), DomainError);
  EXPECT_THROW(run_suite(config), DomainError);
  EXPECT_THROW(SuiteConfig::from_json(R"({"z_grid": [1, 0]})").validate(), DomainError);
}

TEST(Suite, DeterministicReports) {
  SuiteConfig config = SuiteConfig::defaults();
  config.n_max = 3;
  config.relation_max = 3;
  const auto a = run_suite(config);
  config.execution = Execution::serial;
  const auto b = run_suite(config);
  EXPECT_EQ(reports_to_json(a.reports), reports_to_json(b.reports));
  for (const auto& r : a.reports) EXPECT_TRUE(r.consistent()) << r.name;
}

TEST(Reports, JsonRoundTrip) {
  std::vector<CheckReport> reports = {
      make_report("a", 1e-12, 1e-10, 3, "ok"),
      make_report("b", std::numeric_limits<double>::infinity(), 1e-10, 1),
  };
  reports[1].expected_failure = true;
  const auto back = reports_from_json(reports_to_json(reports));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].name, "a");
  EXPECT_EQ(back[0].max_abs_error, 1e-12);
  EXPECT_TRUE(back[0].passed);
  EXPECT_EQ(back[0].notes, "ok");
  EXPECT_TRUE(std::isinf(back[1].max_abs_error));
  EXPECT_FALSE(back[1].passed);
  EXPECT_TRUE(back[1].expected_failure);
  const std::string text = reports_to_text(reports);
  EXPECT_NE(text.find("[PASS ]"), std::string::npos);
  EXPECT_NE(text.find("[XFAIL]"), std::string::npos);
}

TEST(SuiteConfig, FromJson) {
  const SuiteConfig c = SuiteConfig::from_json(
      R"({"n_max": 3, "z_grid": ["1/3", 2], "tol": 1e-8, "execution": "serial"})");
  EXPECT_EQ(c.n_max, 3);
  ASSERT_EQ(c.z_grid.size(), 2u);
  EXPECT_EQ(c.z_grid[0], Real(1) / 3);
  EXPECT_EQ(c.tol, 1e-8);
  EXPECT_EQ(c.execution, Execution::serial);
  EXPECT_EQ(c.inner_t.size(), 10u);
  EXPECT_THROW(SuiteConfig::from_json("[1,2"), DomainError);
}

}  // namespace
}  // namespace kident
