#include "kident/elliptic.hpp"

#include <algorithm>
#include <limits>

namespace kident {
namespace {

template <typename Visit>
Real agm_core(Real a, Real b, const Precision& prec, Visit&& visit) {
  prec.validate();
  if (!(a > 0) || !(b > 0) || !isfinite(a) || !isfinite(b))
    throw DomainError("agm: arguments must be positive and finite");
  visit(a, b);
  for (int i = 0; i < prec.max_iterations; ++i) {
    if (abs(a - b) <= prec.abs_tol) return (a + b) / 2;
    const Real next_a = (a + b) / 2;
    b = sqrt(a * b);
    a = next_a;
    visit(a, b);
  }
  if (abs(a - b) <= prec.abs_tol) return (a + b) / 2;
  throw NumericError("agm: no convergence within " +
                     std::to_string(prec.max_iterations) + " iterations");
}

}  // namespace

Real agm(const Real& a, const Real& b, const Precision& prec) {
  return agm_core(a, b, prec, [](const Real&, const Real&) {});
}

std::vector<std::pair<Real, Real>> agm_iterates(const Real& a, const Real& b,
                                                const Precision& prec) {
  std::vector<std::pair<Real, Real>> steps;
  agm_core(a, b, prec,
           [&](const Real& x, const Real& y) { steps.emplace_back(x, y); });
  return steps;
}

Real ellip_k(const Real& k, const Precision& prec) {
  if (!(k >= 0) || !(k < 1))
    throw DomainError("ellip_k: modulus must satisfy 0 <= k < 1");
  // (1 - k)(1 + k) keeps the complementary modulus accurate as k -> 1.
  const Real kc = sqrt((1 - k) * (1 + k));
  // The AGM limit is >= kc, so a bracket of abs_tol * kc bounds the error in
  // K = pi / (2M) by roughly abs_tol. The floor keeps the bracket reachable
  // in working precision.
  Precision inner = prec;
  inner.abs_tol = std::max<double>(
      static_cast<double>(prec.abs_tol * kc),
      static_cast<double>(16 * std::numeric_limits<Real>::epsilon()));
  return pi() / (2 * agm(Real(1), kc, inner));
}

}  // namespace kident
