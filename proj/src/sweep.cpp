#include "kident/sweep.hpp"

#include <exception>

#include "kident/closed_form.hpp"

namespace kident {
namespace {

// Runs body(i) for i in [0, count). Exceptions are caught per case by the
// bodies themselves; nothing may escape an OpenMP region.
template <typename Body>
void for_cases(long count, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) body(i);
}

template <typename Case, typename Compute>
void guarded(Case& c, Compute&& compute) {
  try {
    compute();
  } catch (const std::exception& e) {
    c.failure = e.what();
  }
}

}  // namespace

std::vector<IdentityCase> identity_sweep(int n_max, std::span<const Real> z_grid,
                                         const Precision& prec, Execution exec) {
  if (n_max < 0) throw DomainError("identity_sweep: n_max must be nonnegative");
  for (const Real& z : z_grid) IntegralSpec{0, z}.validate();
  const long nz = static_cast<long>(z_grid.size());
  std::vector<IdentityCase> cases(static_cast<size_t>((n_max + 1) * nz));
  // Warm the closed-form memo so workers only take the shared lock.
  closed_form(n_max);
  for_cases(static_cast<long>(cases.size()), exec, [&](long i) {
    IdentityCase& c = cases[static_cast<size_t>(i)];
    c.n = static_cast<int>(i / nz);
    c.z = z_grid[static_cast<size_t>(i % nz)];
    guarded(c, [&] {
      c.numeric = integral_In_numeric({c.n, c.z}, prec);
      c.exact = In_exact_real(c.n, c.z);
      c.abs_error = abs(c.numeric.value - c.exact);
      if (!c.numeric.converged) c.failure = "quadrature tolerance not reached";
    });
  });
  return cases;
}

std::vector<InnerCase> inner_identity_sweep(std::span<const Real> z_grid,
                                            std::span<const Real> t_grid,
                                            const Precision& prec,
                                            Execution exec) {
  const long nt = static_cast<long>(t_grid.size());
  std::vector<InnerCase> cases(z_grid.size() * t_grid.size());
  for_cases(static_cast<long>(cases.size()), exec, [&](long i) {
    InnerCase& c = cases[static_cast<size_t>(i)];
    c.z = z_grid[static_cast<size_t>(i / nt)];
    c.t = t_grid[static_cast<size_t>(i % nt)];
    guarded(c, [&] {
      c.numeric = inner_integral_numeric(c.z, c.t, prec);
      c.closed = inner_integral_closed(c.z, c.t);
      c.abs_error = abs(c.numeric - c.closed);
    });
  });
  return cases;
}

std::vector<SwapCase> swap_sweep(std::span<const Real> z_grid,
                                 const Precision& prec, Execution exec) {
  std::vector<SwapCase> cases(z_grid.size());
  for_cases(static_cast<long>(cases.size()), exec, [&](long i) {
    SwapCase& c = cases[static_cast<size_t>(i)];
    c.z = z_grid[static_cast<size_t>(i)];
    guarded(c, [&] {
      c.swapped = I0_via_swap(c.z, prec);
      const auto direct = integral_In_numeric({0, c.z}, prec);
      c.direct = direct.value;
      c.abs_error = abs(c.swapped - c.direct);
      if (!direct.converged) c.failure = "quadrature tolerance not reached";
    });
  });
  return cases;
}

}  // namespace kident
