#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "kident/real.hpp"

namespace kident {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& integer) : q_(integer) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  // Accepts "p/q", integers and decimal notation ("-0.125", "3e-2"); the
  // decimal is converted exactly.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.q_ == rhs.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) {
    const int c = cmp(lhs.q_, rhs.q_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(unsigned exponent) const;

  // "p" for integers, "p/q" otherwise.
  std::string str() const;
  // Always "p/q"; the wire form used in JSON.
  std::string fraction_str() const;

  Real to_real() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Real to_real(const mpz_class& integer);

// Largest s with s^2 dividing |value| (value != 0), found by trial division
// followed by a perfect-square test on the cofactor.
mpz_class square_part_root(const mpz_class& value);

bool is_square_free(const mpz_class& value);

// Exact square root when |r| >= 0 is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace kident
