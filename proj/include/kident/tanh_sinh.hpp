#pragma once

#include <cmath>
#include <limits>
#include <sstream>

#include "kident/real.hpp"

namespace kident {

struct QuadratureResult {
  Real value = 0;
  Real error_estimate = 0;  // |estimate(level) - estimate(level - 1)|
  int levels_used = 0;
  long evaluations = 0;
  bool converged = false;
};

namespace detail {

// Node at t >= 0 of the double-exponential map x = tanh(pi/2 sinh t) on
// (-1, 1). |complement| is 1 - x computed without cancellation.
struct TanhSinhNode {
  Real weight;
  Real complement;
};

TanhSinhNode tanh_sinh_node(const Real& t);

// Weights below this contribute nothing at working precision.
const Real& negligible_weight();

[[noreturn]] void throw_non_finite(const Real& x, const Real& fx);

}  // namespace detail

// Double-exponential quadrature of f over the open interval (a, b).
// Abscissae are strictly interior: a side of the node ladder is cut off as
// soon as its abscissa would round onto an endpoint. Refines level by level
// (the step halves each level) until two successive estimates differ by at
// most prec.abs_tol, or prec.max_level is reached, in which case the best
// estimate is returned with converged == false.
template <typename F>
QuadratureResult tanh_sinh_integrate(F&& f, const Real& a, const Real& b,
                                     const Precision& prec = {}) {
  prec.validate();
  if (!(a < b)) throw DomainError("tanh_sinh_integrate: requires a < b");

  const Real half = (b - a) / 2;
  const Real mid = a + half;
  const Real half_pi = pi() / 2;

  QuadratureResult out;
  auto eval = [&](const Real& x) {
    Real fx = f(x);
    ++out.evaluations;
    if (!boost::multiprecision::isfinite(fx)) detail::throw_non_finite(x, fx);
    return fx;
  };

  // Sum over nodes t = k h for k = first, first + stride, ...; each side of
  // the ladder stops independently.
  auto ladder = [&](const Real& h, long first, long stride) {
    Real sum = 0;
    bool left = true, right = true;
    for (long k = first; left || right; k += stride) {
      const auto node = detail::tanh_sinh_node(h * k);
      if (node.weight < detail::negligible_weight()) break;
      const Real offset = half * node.complement;
      if (right) {
        const Real x = b - offset;
        if (x < b && x > a) sum += node.weight * eval(x);
        else right = false;
      }
      if (left) {
        const Real x = a + offset;
        if (x > a && x < b) sum += node.weight * eval(x);
        else left = false;
      }
    }
    return sum;
  };

  Real h = 1;
  Real sum = half_pi * eval(mid) + ladder(h, 1, 1);
  Real previous = h * half * sum;
  out.value = previous;
  out.error_estimate = std::numeric_limits<Real>::infinity();

  for (int level = 1; level <= prec.max_level; ++level) {
    h /= 2;
    sum += ladder(h, 1, 2);
    const Real estimate = h * half * sum;
    out.value = estimate;
    out.error_estimate = abs(estimate - previous);
    out.levels_used = level;
    previous = estimate;
    if (level >= 2 && out.error_estimate <= prec.abs_tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace kident
