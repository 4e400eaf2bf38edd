#pragma once

#include <utility>
#include <vector>

#include "kident/real.hpp"

namespace kident {

// Arithmetic-geometric mean of a, b > 0. Stops once |a_i - b_i| <= abs_tol
// and returns the midpoint of the final bracket. Throws NumericError when
// the bracket does not close within prec.max_iterations.
Real agm(const Real& a, const Real& b, const Precision& prec = {});

// The (a_i, b_i) pairs visited by agm(), starting with the inputs.
std::vector<std::pair<Real, Real>> agm_iterates(const Real& a, const Real& b,
                                                const Precision& prec = {});

// Complete elliptic integral of the first kind in the Legendre-modulus
// convention, K(k) = int_0^1 dt / sqrt((1 - t^2)(1 - k^2 t^2)), evaluated as
// pi / (2 agm(1, sqrt(1 - k^2))). Requires 0 <= k < 1.
Real ellip_k(const Real& k, const Precision& prec = {});

}  // namespace kident
