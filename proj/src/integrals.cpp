#include "kident/integrals.hpp"

#include "kident/elliptic.hpp"

namespace kident {
namespace {

// Tighter than any acceptance tolerance; AGM converges quadratically so this
// costs one or two extra iterations.
const Precision kKernelPrecision{1e-20, 64, 12};

Real power_half_integer(const Real& base, int n) {
  // base^(n + 3/2)
  Real p = base * sqrt(base);
  for (int i = 0; i < n; ++i) p *= base;
  return p;
}

void require_z(const Real& z, const char* who) {
  if (!(z > 0) || !isfinite(z))
    throw DomainError(std::string(who) + ": z must be positive and finite");
}

}  // namespace

void IntegralSpec::validate() const {
  if (n < 0) throw DomainError("integral: n must be a nonnegative integer");
  require_z(z, "integral");
}

QuadratureResult integral_In_numeric(const IntegralSpec& spec,
                                     const Precision& prec) {
  spec.validate();
  const int n = spec.n;
  const Real z = spec.z;
  return tanh_sinh_integrate(
      [&](const Real& k) {
        return ellip_k(k, kKernelPrecision) * k /
               power_half_integer(z + k * k, n);
      },
      Real(0), Real(1), prec);
}

Real integral_In_lower_bound(const IntegralSpec& spec) {
  spec.validate();
  const Real e = Real(spec.n) + Real(0.5);
  return pi() / 2 * (pow(spec.z, -e) - pow(spec.z + 1, -e)) /
         (2 * spec.n + 1);
}

Real inner_integral_numeric(const Real& z, const Real& t,
                            const Precision& prec) {
  require_z(z, "inner_integral_numeric");
  if (!(t >= 0) || !(t < 1))
    throw DomainError("inner_integral_numeric: t must satisfy 0 <= t < 1");
  if (t == 0) return 1 / sqrt(z) - 1 / sqrt(1 + z);
  const auto r = tanh_sinh_integrate(
      [&](const Real& k) {
        const Real kt = k * t;
        return k / (power_half_integer(z + k * k, 0) *
                    sqrt((1 - kt) * (1 + kt)));
      },
      Real(0), Real(1), prec);
  if (!r.converged)
    throw NumericError("inner_integral_numeric: tolerance not reached");
  return r.value;
}

Real inner_integral_closed(const Real& z, const Real& t) {
  require_z(z, "inner_integral_closed");
  if (!(t >= 0) || !(t < 1))
    throw DomainError("inner_integral_closed: t must satisfy 0 <= t < 1");
  const Real denom = 1 + z * t * t;
  return 1 / (sqrt(z) * denom) -
         sqrt((1 - t) * (1 + t)) / (sqrt(1 + z) * denom);
}

Real I0_via_swap(const Real& z, const Precision& prec) {
  require_z(z, "I0_via_swap");
  const auto r = tanh_sinh_integrate(
      [&](const Real& t) {
        return inner_integral_closed(z, t) / sqrt((1 - t) * (1 + t));
      },
      Real(0), Real(1), prec);
  if (!r.converged) throw NumericError("I0_via_swap: tolerance not reached");
  return r.value;
}

}  // namespace kident
