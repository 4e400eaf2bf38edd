#include "kident/quadratic_field.hpp"

#include <numeric>

namespace kident {

QuadExt::QuadExt(const Rational& a, const Rational& b, long d)
    : a_(a), b_(b), d_(d) {
  if (d < 1 || !is_square_free(mpz_class(d)))
    throw DomainError("QuadExt: d = " + std::to_string(d) +
                      " is not a square-free positive integer");
  fold();
}

QuadExt::QuadExt(Rational a, Rational b, long d, Trusted)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  fold();
}

void QuadExt::fold() {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_.is_zero()) d_ = 1;
}

int QuadExt::sign() const {
  const int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger of a^2 and d b^2 wins.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

QuadExt QuadExt::conjugate() const { return {a_, -b_, d_, Trusted{}}; }

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DivisionByZero("QuadExt: division by zero");
  const Rational n = norm();
  return {a_ / n, -b_ / n, d_, Trusted{}};
}

QuadExt QuadExt::pow(unsigned exponent) const {
  QuadExt result(1), base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

QuadExt QuadExt::operator-() const { return {-a_, -b_, d_, Trusted{}}; }

long common_field(const QuadExt& x, const QuadExt& y) {
  if (x.d() == 1) return y.d();
  if (y.d() == 1 || x.d() == y.d()) return x.d();
  throw FieldMismatch("QuadExt: mixed fields Q(sqrt " + std::to_string(x.d()) +
                      ") and Q(sqrt " + std::to_string(y.d()) + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  const long d = common_field(*this, rhs);
  *this = QuadExt(a_ + rhs.a_, b_ + rhs.b_, d, Trusted{});
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) { return *this += -rhs; }

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  const long d = common_field(*this, rhs);
  *this = QuadExt(a_ * rhs.a_ + b_ * rhs.b_ * Rational(d),
                  a_ * rhs.b_ + b_ * rhs.a_, d, Trusted{});
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  common_field(*this, rhs);
  return *this *= rhs.inverse();
}

Real QuadExt::to_real() const {
  if (is_rational()) return a_.to_real();
  return a_.to_real() + b_.to_real() * sqrt(Real(d_));
}

std::string QuadExt::str() const {
  if (is_rational()) return a_.str();
  std::string out = a_.is_zero() ? "" : a_.str() + (b_.sign() < 0 ? " - " : " + ");
  if (a_.is_zero() && b_.sign() < 0) out += "-";
  out += b_.abs().str() + "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

std::optional<QuadExt> sqrt_in_field(const QuadExt& x, long field_d) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return QuadExt(0);
  Rational root;
  if (x.is_rational()) {
    if (rational_sqrt(x.a(), root)) return QuadExt(root);
    if (field_d > 1 && rational_sqrt(x.a() / Rational(field_d), root))
      return QuadExt(0, root, field_d);
    return std::nullopt;
  }
  if (field_d != 1 && field_d != x.d()) return std::nullopt;
  // (p + q sqrt d)^2 = x  <=>  p^2 + d q^2 = a, 2 p q = b, so p^2 solves
  // X^2 - a X + d b^2 / 4 = 0.
  Rational disc_root;
  if (!rational_sqrt(x.norm(), disc_root)) return std::nullopt;
  for (const Rational& p_sq :
       {(x.a() + disc_root) / Rational(2), (x.a() - disc_root) / Rational(2)}) {
    Rational p;
    if (p_sq.is_zero() || !rational_sqrt(p_sq, p)) continue;
    const Rational q = x.b() / (Rational(2) * p);
    QuadExt y(p, q, x.d());
    if (y.sign() < 0) y = -y;
    if (y * y == x) return y;
  }
  return std::nullopt;
}

Real Surd::to_real() const { return scale.to_real() * sqrt(radicand.to_real()); }

SurdForm surd_normalize(const Surd& s, long field_d) {
  if (s.radicand.sign() <= 0)
    throw DomainError("surd: radicand must be positive, got " + s.radicand.str());
  if (field_d == 0) field_d = s.radicand.d();
  if (s.radicand.d() != 1 && field_d != s.radicand.d())
    throw FieldMismatch("surd: radicand outside Q(sqrt " + std::to_string(field_d) + ")");

  // sqrt(x) = sqrt(x L^2) / L with L clearing both denominators.
  const QuadExt& x = s.radicand;
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), x.a().denominator().get_mpz_t(),
          x.b().denominator().get_mpz_t());
  const Rational l2 = Rational(l * l);
  const mpz_class ia = (x.a() * l2).numerator();
  const mpz_class ib = (x.b() * l2).numerator();
  mpz_class content;
  mpz_gcd(content.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
  const mpz_class root = square_part_root(content);
  const mpz_class root_sq = root * root;

  const QuadExt reduced =
      x.is_rational() ? QuadExt(Rational(ia / root_sq))
                      : QuadExt(Rational(ia / root_sq), Rational(ib / root_sq), x.d());
  const Rational scale = s.scale * Rational(root, l);

  if (auto y = sqrt_in_field(reduced, field_d)) return *y * QuadExt(scale);
  return Surd{reduced, scale};
}

Real DenestedSurd::to_real() const {
  return scale.to_real() *
         (sqrt(first.to_real()) + Real(sign) * sqrt(second.to_real()));
}

std::optional<DenestedSurd> surd_denest(const Surd& s) {
  const QuadExt& x = s.radicand;
  if (x.is_rational() || x.sign() <= 0) return std::nullopt;
  // a + sqrt(c) with c = d b^2; r^2 = a^2 - c = norm.
  Rational r;
  if (!rational_sqrt(x.norm(), r)) return std::nullopt;
  const Rational first = (x.a() + r) / Rational(2);
  const Rational second = (x.a() - r) / Rational(2);
  if (first.sign() <= 0 || second.sign() < 0) return std::nullopt;
  return DenestedSurd{s.scale, first, second, x.b().sign()};
}

}  // namespace kident
