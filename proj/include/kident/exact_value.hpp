#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kident/quadratic_field.hpp"

namespace kident {

// z for which ArcCot(sqrt z) = theta_over_pi * pi and z lies in Q(sqrt field_d).
struct SpecialPoint {
  std::string label;
  QuadExt z;
  Rational theta_over_pi;
  long field_d = 1;
};

// z = 1, 3, 1/3, cot^2(pi/10) = 5 + 2 sqrt 5 and cot^2(pi/12) = 7 + 4 sqrt 3.
const std::vector<SpecialPoint>& special_points();

// Looks a point up by catalog label ("z1", "cot2_pi_10") or by its command
// line spelling ("1", "cot2-pi-10"). Throws DomainError for unknown names.
const SpecialPoint& find_special_point(std::string_view name);

// A user-supplied point. Rejects z <= 0 or a theta that does not match
// ArcCot(sqrt z) / pi numerically.
SpecialPoint make_special_point(const QuadExt& z, const Rational& theta_over_pi,
                                std::string label = "custom");

// pi_coeff * pi / pi_surd + alg_coeff / alg_surd. In canonical form both
// surds have unit scale and a normalized radicand, and a zero coefficient
// carries the surd sqrt(1).
struct ExactValue {
  QuadExt pi_coeff;
  Surd pi_surd;
  QuadExt alg_coeff;
  Surd alg_surd;

  // Canonicalizes coeff / sqrt(radicand) for both terms; radicands are
  // interpreted in Q(sqrt field_d).
  static ExactValue make(const QuadExt& pi_coeff, const QuadExt& pi_radicand,
                         const QuadExt& alg_coeff, const QuadExt& alg_radicand,
                         long field_d = 0);

  bool is_zero() const { return pi_coeff.is_zero() && alg_coeff.is_zero(); }
  Real to_real() const;

  // Value equality: term by term, c1/sqrt(r1) == c2/sqrt(r2) decided by
  // comparing signs and c1^2 r2 == c2^2 r1.
  bool same_value(const ExactValue& other) const;
  friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

// I_n(z) at a special point, computed exactly from closed_form(n).
ExactValue eval_at_special(int n, const SpecialPoint& point);

// sqrt(2) I_k(1) = a + b pi.
struct UnitCoefficients {
  Rational a;
  Rational b;
};
UnitCoefficients unit_coefficients(int k);

// Rational P, Q with sqrt(2) I_n(1) + P sqrt(2) I_m(1) + Q = 0.
struct Relation {
  Rational P;
  Rational Q;
};
// Throws DomainError when b_m == 0.
Relation relation(int n, int m);

enum class Format { text, unicode, latex, json };
enum class TermOrder { algebraic_first, pi_first };

Format parse_format(std::string_view name);

// Deterministic rendering. text: "pi/(4*sqrt(2))"; unicode: "π/(4√2)";
// latex: "\frac{\pi}{4\sqrt{2}}"; json: the wire schema. A rational
// radicand goes to the numerator when it divides the coefficient's
// numerator ("3*sqrt(3)/8"), otherwise it stays in the denominator.
std::string render(const ExactValue& v, Format format,
                   TermOrder order = TermOrder::algebraic_first);

// Renders a field element on its own, e.g. "5+2√5".
std::string render(const QuadExt& x, Format format);

// Inverse of render(v, Format::json). Throws DomainError on malformed input.
ExactValue exact_value_from_json(std::string_view json);

}  // namespace kident
