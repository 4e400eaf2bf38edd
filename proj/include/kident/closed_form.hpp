#pragma once

#include <gmpxx.h>

#include "kident/polynomial.hpp"
#include "kident/real.hpp"

namespace kident {

// n-th derivative of F(z) = ArcCot(sqrt z) / sqrt(z (z + 1)) written as
//   F^(n)(z) = [A(z) ArcCot(sqrt z) + B(z) sqrt z] / (c z^(n+1/2) (z+1)^(n+1/2)).
// deg A = n, deg B = n - 1 (B = 0 for n = 0), c = 2^n and the leading
// coefficient of A is (-1)^n 2^n n!.
struct ClosedForm {
  int n = 0;
  Polynomial A;
  Polynomial B;
  mpz_class c = 1;
};

// Built from A_0 = 1, B_0 = 0, c_0 = 1 by
//   A_{m+1} = 2z(z+1) A_m' - (2m+1)(2z+1) A_m
//   B_{m+1} = 2z(z+1) B_m' - ((4m+1) z + 2m) B_m - A_m
//   c_{m+1} = 2 c_m.
// Results are memoized; safe to call from several threads.
const ClosedForm& closed_form(int n);

// (-1)^n / (2n+1)!!, i.e. (-2)^n / ((2n+1)!! c_n).
Rational closed_form_prefactor(int n);

// (2n+1)!! = 1 * 3 * 5 * ... * (2n+1).
mpz_class double_factorial_odd(int n);

// I_n(z) from the closed form, in floating point:
//   prefactor * [A ArcCot(sqrt z) / sqrt(z(z+1)) + B / sqrt(z+1)] / (z^n (z+1)^n).
Real In_exact_real(int n, const Real& z);

}  // namespace kident
