#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "kident/rational.hpp"

namespace kident {

// Operands live in two different quadratic fields Q(sqrt d1), Q(sqrt d2).
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// a + b sqrt(d) with d a square-free positive integer. Rationals are stored
// with b = 0 and d = 1 whatever field they came from, so equality is
// structural.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
  // Throws DomainError unless d >= 1 is square-free.
  QuadExt(const Rational& a, const Rational& b, long d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  int sign() const;  // exact sign of the real number

  QuadExt conjugate() const;
  Rational norm() const;  // a^2 - d b^2
  QuadExt inverse() const;
  QuadExt pow(unsigned exponent) const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);
  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }
  friend bool operator==(const QuadExt&, const QuadExt&) = default;

  Real to_real() const;
  std::string str() const;  // "a + b*sqrt(d)", debugging form

 private:
  struct Trusted {};
  QuadExt(Rational a, Rational b, long d, Trusted);
  void fold();

  Rational a_;
  Rational b_;
  long d_ = 1;
};

// Field shared by x and y: the d of whichever is irrational. Throws
// FieldMismatch when both are irrational over different d.
long common_field(const QuadExt& x, const QuadExt& y);

// Positive y in Q(sqrt field_d) with y^2 == x, if one exists.
std::optional<QuadExt> sqrt_in_field(const QuadExt& x, long field_d);

// Formal square root: scale * sqrt(radicand), radicand > 0.
struct Surd {
  QuadExt radicand = 1;
  Rational scale = 1;

  Real to_real() const;
  friend bool operator==(const Surd&, const Surd&) = default;
};

using SurdForm = std::variant<QuadExt, Surd>;

// Makes the radicand an integral a + b sqrt(d) whose content gcd(a, b) is
// square-free, moving square factors into the scale. A radicand that is a
// square in Q(sqrt field_d) demotes the result to a QuadExt. field_d == 0
// means the radicand's own field.
SurdForm surd_normalize(const Surd& s, long field_d = 0);

// scale * (sqrt(first) + sign * sqrt(second)) with rational radicands.
struct DenestedSurd {
  Rational scale = 1;
  Rational first;
  Rational second;
  int sign = 1;

  Real to_real() const;
};

// sqrt(a + b sqrt(d)) = sqrt((a + r)/2) +- sqrt((a - r)/2) whenever
// r = sqrt(a^2 - d b^2) is rational and a > r. Nothing for rational
// radicands or when r is irrational.
std::optional<DenestedSurd> surd_denest(const Surd& s);

}  // namespace kident
