#pragma once

#include <span>
#include <string>
#include <vector>

#include "kident/integrals.hpp"

namespace kident {

// serial is the reference loop; parallel distributes cases over OpenMP
// threads. Every case is computed by the same code either way, so both
// produce bit-identical results.
enum class Execution { serial, parallel };

struct IdentityCase {
  int n = 0;
  Real z = 0;
  QuadratureResult numeric;  // direct quadrature
  Real exact = 0;            // closed form
  Real abs_error = 0;
  std::string failure;       // non-empty when a route threw
};

// |integral_In_numeric - In_exact_real| for n = 0..n_max and every z.
std::vector<IdentityCase> identity_sweep(int n_max, std::span<const Real> z_grid,
                                         const Precision& prec,
                                         Execution exec = Execution::parallel);

struct InnerCase {
  Real z = 0;
  Real t = 0;
  Real numeric = 0;
  Real closed = 0;
  Real abs_error = 0;
  std::string failure;
};

// inner_integral_numeric vs inner_integral_closed on the z x t product grid.
std::vector<InnerCase> inner_identity_sweep(std::span<const Real> z_grid,
                                            std::span<const Real> t_grid,
                                            const Precision& prec,
                                            Execution exec = Execution::parallel);

struct SwapCase {
  Real z = 0;
  Real swapped = 0;  // I0_via_swap
  Real direct = 0;   // integral_In_numeric(0, z)
  Real abs_error = 0;
  std::string failure;
};

std::vector<SwapCase> swap_sweep(std::span<const Real> z_grid,
                                 const Precision& prec,
                                 Execution exec = Execution::parallel);

}  // namespace kident
