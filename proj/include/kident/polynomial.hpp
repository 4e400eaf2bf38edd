#pragma once

#include <string>
#include <vector>

#include "kident/rational.hpp"

namespace kident {

// Dense univariate polynomial in z; coefficient i multiplies z^i. Trailing
// zeros are never stored, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int power);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rational coefficient(int power) const;
  Rational leading() const;

  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Horner evaluation; T needs +, * with T and construction from Rational.
  template <typename T, typename Convert>
  T evaluate(const T& z, Convert&& convert) const {
    T acc = convert(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * z + convert(*it);
    return acc;
  }
  Rational operator()(const Rational& z) const;
  Real operator()(const Real& z) const;

  // e.g. "8*z^2 + 8*z + 3"
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace kident
