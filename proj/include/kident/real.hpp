#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/float128.hpp>

namespace kident {

// Working floating type for every numeric route. 113-bit significand; the
// identity sweep needs ~18 significant digits on values of order 1e7.
using Real = boost::multiprecision::float128;

Real pi();

// Formats |x| with |digits| significant digits in scientific notation when
// the magnitude calls for it.
std::string to_string(const Real& x, int digits = 30);

// Parses a decimal string ("0.1", "-2.5e-3") or a rational "p/q".
Real parse_real(const std::string& text);

struct Precision {
  double abs_tol = 1e-12;
  int max_iterations = 64;  // AGM iterations
  int max_level = 12;       // tanh-sinh refinement levels (step halves per level)

  // Throws DomainError if a field is out of range.
  void validate() const;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iteration failed to reach its tolerance, or produced a non-finite value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kident
