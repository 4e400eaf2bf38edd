#include "kident/closed_form.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace kident {
namespace {

ClosedForm next(const ClosedForm& cur) {
  const long m = cur.n;
  const Polynomial z_z1({0, 2, 2});             // 2z(z+1)
  const Polynomial a_factor({2 * m + 1, 2 * (2 * m + 1)});  // (2m+1)(2z+1)
  const Polynomial b_factor({2 * m, 4 * m + 1});            // (4m+1)z + 2m
  ClosedForm out;
  out.n = cur.n + 1;
  out.A = z_z1 * cur.A.derivative() - a_factor * cur.A;
  out.B = z_z1 * cur.B.derivative() - b_factor * cur.B - cur.A;
  out.c = cur.c * 2;
  return out;
}

class Memo {
 public:
  const ClosedForm& get(int n) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<size_t>(n) < forms_.size()) return forms_[static_cast<size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    if (forms_.empty()) forms_.push_back({0, Polynomial::constant(1), {}, 1});
    while (forms_.size() <= static_cast<size_t>(n)) forms_.push_back(next(forms_.back()));
    return forms_[static_cast<size_t>(n)];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<ClosedForm> forms_;  // deque: references stay valid on growth
};

}  // namespace

const ClosedForm& closed_form(int n) {
  if (n < 0) throw DomainError("closed_form: n must be nonnegative");
  static Memo memo;
  return memo.get(n);
}

mpz_class double_factorial_odd(int n) {
  mpz_class f = 1;
  for (long k = 3; k <= 2L * n + 1; k += 2) f *= k;
  return f;
}

Rational closed_form_prefactor(int n) {
  if (n < 0) throw DomainError("closed_form_prefactor: n must be nonnegative");
  return Rational(mpz_class(n % 2 ? -1 : 1), double_factorial_odd(n));
}

Real In_exact_real(int n, const Real& z) {
  if (n < 0) throw DomainError("In_exact_real: n must be nonnegative");
  if (!(z > 0) || !isfinite(z)) throw DomainError("In_exact_real: z must be positive");
  const ClosedForm& cf = closed_form(n);
  const Real sz = sqrt(z), sz1 = sqrt(z + 1);
  const Real arccot = atan(1 / sz);
  const Real bracket = cf.A(z) * arccot / (sz * sz1) + cf.B(z) / sz1;
  Real scale = 1;
  const Real zz1 = z * (z + 1);
  for (int i = 0; i < n; ++i) scale *= zz1;
  return closed_form_prefactor(n).to_real() * bracket / scale;
}

}  // namespace kident
