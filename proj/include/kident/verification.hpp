#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kident/sweep.hpp"

namespace kident {

// passed == (max_abs_error <= tolerance). Exact checks use tolerance 0 and
// report 0 when every rational equality holds. expected_failure marks a
// known, documented failure that does not fail the suite.
struct CheckReport {
  std::string name;
  double max_abs_error = 0;
  double tolerance = 0;
  bool passed = false;
  int cases = 0;
  std::string notes;
  bool expected_failure = false;

  bool consistent() const { return passed == (max_abs_error <= tolerance); }
  bool acceptable() const { return passed || expected_failure; }
};

CheckReport make_report(std::string name, double max_abs_error, double tolerance,
                        int cases, std::string notes = {});

// Direct quadrature against the closed form for n = 0..n_max over z_grid.
// A case whose quadrature fails counts as an infinite error.
CheckReport check_identity(int n_max, std::span<const Real> z_grid, double tol,
                           const Precision& prec = {},
                           Execution exec = Execution::parallel);

// I_{n+1}(z) = -2/(2n+3) dI_n/dz with the derivative taken by central
// differences at h and h/2 and Richardson-extrapolated. max_abs_error holds
// the relative error. Requires z - h > 0.
CheckReport check_derivative_step(int n, const Real& z, const Real& h,
                                  double rel_tol = 1e-6,
                                  const Precision& prec = {});

CheckReport check_inner_identity(std::span<const Real> z_grid,
                                 std::span<const Real> t_grid, double tol,
                                 const Precision& prec = {},
                                 Execution exec = Execution::parallel);

CheckReport check_order_swap(std::span<const Real> z_grid, double tol,
                             const Precision& prec = {},
                             Execution exec = Execution::parallel);

// Every pair n, m <= max_index: exact rational identity and, through
// quadrature, |sqrt2 I_n(1) + P sqrt2 I_m(1) + Q| <= tol.
CheckReport check_relations(int max_index, double tol, const Precision& prec = {});

// Published closed forms, stored as exact data and compared against
// eval_at_special. I_2(3) is published with sqrt 2 where the closed form
// gives sqrt 3; that entry is reported as a mismatch (expected_failure) and
// an extra report lets quadrature arbitrate.
std::vector<CheckReport> audit_published_tables(const Precision& prec = {});

// Spot checks of module invariants: elliptic monotonicity and lower bound,
// closed-form structure, exact vs floating evaluation at every special
// point, surd normalization idempotence.
std::vector<CheckReport> check_invariants();

struct SuiteConfig {
  int n_max = 8;
  std::vector<Real> z_grid;        // defaults: 0.1, 1/3, 1, 3, 10
  double tol = 1e-10;
  int derivative_n_max = 4;
  std::vector<Real> derivative_z;  // defaults: 1/3, 1, 3
  Real step = Real(1) / 10000;
  double derivative_rel_tol = 1e-6;
  std::vector<Real> inner_z;       // 10 log-spaced points in [0.1, 10]
  std::vector<Real> inner_t;       // 0.05, 0.15, ..., 0.95
  int relation_max = 10;
  Precision precision;
  Execution execution = Execution::parallel;

  static SuiteConfig defaults();
  // Keys mirror the fields; z values may be strings ("1/3") or numbers.
  // Missing keys keep their defaults.
  static SuiteConfig from_json(std::string_view json);
  // Throws DomainError for any z <= 0, negative n or non-positive tolerance.
  void validate() const;
};

struct SuiteReport {
  std::vector<CheckReport> reports;
  double seconds = 0;

  bool all_acceptable() const;
  int exit_status() const { return all_acceptable() ? 0 : 1; }
};

SuiteReport run_suite(const SuiteConfig& config);

std::string reports_to_text(const std::vector<CheckReport>& reports);
std::string reports_to_json(const std::vector<CheckReport>& reports);
std::vector<CheckReport> reports_from_json(std::string_view json);

}  // namespace kident
