#include "kident/tanh_sinh.hpp"

namespace kident::detail {

TanhSinhNode tanh_sinh_node(const Real& t) {
  const Real half_pi = pi() / 2;
  const Real s = half_pi * sinh(t);
  const Real cs = cosh(s);
  // 1 - tanh(s) = exp(-s) / cosh(s)
  return {half_pi * cosh(t) / (cs * cs), 1 / (exp(s) * cs)};
}

const Real& negligible_weight() {
  static const Real w = std::numeric_limits<Real>::epsilon() *
                        std::numeric_limits<Real>::epsilon();
  return w;
}

void throw_non_finite(const Real& x, const Real& fx) {
  throw NumericError("tanh_sinh_integrate: non-finite integrand value " +
                     to_string(fx, 6) + " at x = " + to_string(x, 36));
}

}  // namespace kident::detail
