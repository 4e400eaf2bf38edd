#include "kident/rational.hpp"

#include <cctype>

namespace kident {
namespace {

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty())
    throw DomainError("rational: malformed number '" + std::string(whole) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError("rational: malformed number '" + std::string(whole) + "'");
  return mpz_class(std::string(digits), 10);
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part[0] == '-' || exp_part[0] == '+')) {
      exp_negative = exp_part[0] == '-';
      exp_part.remove_prefix(1);
    }
    const mpz_class magnitude = parse_integer(exp_part, whole);
    if (magnitude > 4096)
      throw DomainError("rational: exponent out of range in '" + std::string(whole) + "'");
    exponent = magnitude.get_si() * (exp_negative ? -1 : 1);
    text = text.substr(0, e);
  }
  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    digits = std::string(text.substr(0, dot)) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    digits = std::string(text);
  }
  mpz_class mantissa = parse_integer(digits, whole);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  return exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : q_(numerator, denominator) {
  if (denominator == 0) throw DivisionByZero("rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw DomainError("rational: empty string");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational p = parse_decimal(text.substr(0, slash), whole);
    const Rational q = parse_decimal(text.substr(slash + 1), whole);
    if (q.is_zero()) throw DivisionByZero("rational: zero denominator in '" + std::string(whole) + "'");
    return p / q;
  }
  return parse_decimal(text, whole);
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("rational: division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_str();
}

std::string Rational::fraction_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Real Rational::to_real() const {
  return kident::to_real(q_.get_num()) / kident::to_real(q_.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Real to_real(const mpz_class& integer) {
  // Limbs are accumulated most-significant first; exact while the value fits
  // the 113-bit significand, correctly scaled beyond.
  const mp_size_t limbs = mpz_size(integer.get_mpz_t());
  const Real base = ldexp(Real(1), GMP_NUMB_BITS);
  Real value = 0;
  for (mp_size_t i = limbs; i-- > 0;)
    value = value * base + Real(mpz_getlimbn(integer.get_mpz_t(), i));
  return sgn(integer) < 0 ? -value : value;
}

mpz_class square_part_root(const mpz_class& value) {
  mpz_class rest = abs(value);
  if (rest == 0) throw DomainError("square_part_root: zero");
  mpz_class root = 1;
  for (unsigned long p = 2; p < 100000; p += (p == 2 ? 1 : 2)) {
    const mpz_class pp = mpz_class(p) * p;
    if (pp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        root *= p;
      } else {
        break;
      }
    }
  }
  // Whatever survives trial division has no prime factor below the bound; if
  // it is itself a square it still carries a square factor.
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    root *= s;
  }
  return root;
}

bool is_square_free(const mpz_class& value) {
  return value != 0 && square_part_root(value) == 1;
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r.sign() < 0) return false;
  const mpz_class num = r.numerator(), den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  root = Rational(sn, sd);
  return true;
}

}  // namespace kident
