#pragma once

#include "kident/real.hpp"
#include "kident/tanh_sinh.hpp"

namespace kident {

// Member of the family I_n(z) = int_0^1 K(k) k / (z + k^2)^(n + 3/2) dk.
struct IntegralSpec {
  int n = 0;
  Real z = 1;

  void validate() const;  // n >= 0, z > 0 and finite
};

// Direct quadrature of I_n(z) with the elliptic kernel evaluated by AGM.
QuadratureResult integral_In_numeric(const IntegralSpec& spec,
                                     const Precision& prec = {});

// Pointwise lower bound from K >= pi/2:
// (pi/2) (z^(-n-1/2) - (z+1)^(-n-1/2)) / (2n+1).
Real integral_In_lower_bound(const IntegralSpec& spec);

// Inner integral of the order-swapped form of I_0,
//   int_0^1 k dk / ((z + k^2)^(3/2) sqrt(1 - k^2 t^2)),
// by quadrature. t == 0 takes the elementary value 1/sqrt(z) - 1/sqrt(1+z).
// Throws NumericError if the quadrature does not converge.
Real inner_integral_numeric(const Real& z, const Real& t,
                            const Precision& prec = {});

// Closed form of the same inner integral:
//   1/(sqrt(z)(1 + z t^2)) - sqrt(1 - t^2)/(sqrt(1 + z)(1 + z t^2)).
// Requires z > 0, 0 <= t < 1.
Real inner_integral_closed(const Real& z, const Real& t);

// I_0(z) as the outer integral over t of inner_integral_closed / sqrt(1-t^2).
Real I0_via_swap(const Real& z, const Precision& prec = {});

}  // namespace kident
