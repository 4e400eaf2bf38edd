#include "kident/real.hpp"

#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "kident/rational.hpp"

namespace kident {

Real pi() { return boost::math::constants::pi<Real>(); }

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Real parse_real(const std::string& text) {
  // Route through the exact parser so "1/3" and "0.1" are both accepted and
  // rounded once.
  return Rational::parse(text).to_real();
}

void Precision::validate() const {
  if (!(abs_tol > 0)) throw DomainError("precision: abs_tol must be positive");
  if (max_iterations < 1)
    throw DomainError("precision: max_iterations must be >= 1");
  if (max_level < 1) throw DomainError("precision: max_level must be >= 1");
}

}  // namespace kident
