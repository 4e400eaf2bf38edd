#include <random>

#include <gtest/gtest.h>

#include "kident/integrals.hpp"

namespace kident {
namespace {

const Real kSqrt2 = sqrt(Real(2));
const Real kSqrt3 = sqrt(Real(3));

Real In(int n, const Real& z) {
  const auto r = integral_In_numeric({n, z});
  EXPECT_TRUE(r.converged);
  return r.value;
}

TEST(IntegralIn, PublishedValues) {
  EXPECT_LT(abs(In(0, 1) - pi() / (4 * kSqrt2)), Real(1e-20));
  EXPECT_LT(abs(In(0, 3) - pi() / (12 * kSqrt3)), Real(1e-20));
  EXPECT_LT(abs(In(2, 1) - (1 / (6 * kSqrt2) + 19 * pi() / (240 * kSqrt2))), Real(1e-20));
}

TEST(IntegralIn, ResultReportsWork) {
  const auto r = integral_In_numeric({3, Real(0.25)});
  EXPECT_TRUE(r.converged);
  EXPECT_GE(r.error_estimate, Real(0));
  EXPECT_LE(r.levels_used, Precision{}.max_level);
  EXPECT_GT(r.evaluations, 0);
}

TEST(IntegralIn, DomainErrors) {
  EXPECT_THROW(integral_In_numeric({0, Real(0)}), DomainError);
  EXPECT_THROW(integral_In_numeric({0, Real(-1)}), DomainError);
  EXPECT_THROW(integral_In_numeric({-1, Real(1)}), DomainError);
}

TEST(IntegralIn, RandomizedPositivityAndLowerBound) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> n_dist(0, 10);
  std::uniform_real_distribution<double> log_z(-2.0, 2.0);
  for (int i = 0; i < 40; ++i) {
    const IntegralSpec spec{n_dist(rng), pow(Real(10), Real(log_z(rng)))};
    const Real v = integral_In_numeric(spec).value;
    EXPECT_GT(v, 0);
    EXPECT_GE(v, integral_In_lower_bound(spec)) << spec.n << " " << spec.z;
  }
}

TEST(IntegralIn, MonotoneInZ) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_z(-1.5, 1.5);
  for (int i = 0; i < 20; ++i) {
    Real z1 = pow(Real(10), Real(log_z(rng))), z2 = pow(Real(10), Real(log_z(rng)));
    if (z1 == z2) continue;
    if (z1 > z2) std::swap(z1, z2);
    for (int n : {0, 2, 5}) EXPECT_GT(In(n, z1), In(n, z2));
  }
}

TEST(IntegralIn, MonotoneInNForZAtLeastOne) {
  for (double z : {1.0, 1.5, 3.0, 20.0})
    for (int n = 0; n < 8; ++n) EXPECT_LE(In(n + 1, Real(z)), In(n, Real(z)));
}

TEST(InnerIntegral, ZeroTIsElementary) {
  for (double z : {0.1, 1.0, 7.0}) {
    const Real zr = z;
    EXPECT_EQ(inner_integral_numeric(zr, Real(0)), 1 / sqrt(zr) - 1 / sqrt(1 + zr));
  }
}

TEST(InnerIntegral, NumericMatchesClosed) {
  EXPECT_LE(abs(inner_integral_numeric(1, Real(0.5)) - inner_integral_closed(1, Real(0.5))),
            Real(1e-10));
  EXPECT_LE(abs(inner_integral_numeric(3, Real(0.9)) - inner_integral_closed(3, Real(0.9))),
            Real(1e-10));
}

TEST(InnerIntegral, ClosedFormSubstitutions) {
  EXPECT_LT(abs(inner_integral_closed(1, 0) - (1 - 1 / kSqrt2)), Real(1e-32));
  EXPECT_LT(abs(inner_integral_closed(1, 1 - Real(1e-20)) - Real(0.5)), Real(1e-9));
  EXPECT_LT(abs(inner_integral_closed(4, Real(0.5)) -
                (Real(0.25) - kSqrt3 / (4 * sqrt(Real(5))))),
            Real(1e-32));
}

TEST(InnerIntegral, DomainErrors) {
  EXPECT_THROW(inner_integral_closed(0, Real(0.5)), DomainError);
  EXPECT_THROW(inner_integral_closed(1, 1), DomainError);
  EXPECT_THROW(inner_integral_numeric(1, Real(-0.1)), DomainError);
}

TEST(OrderSwap, PublishedValues) {
  EXPECT_LT(abs(I0_via_swap(1) - pi() / (4 * kSqrt2)), Real(1e-16));
  EXPECT_LT(abs(I0_via_swap(Real(1) / 3) - pi() / 2), Real(1e-16));
  EXPECT_LT(abs(I0_via_swap(3) - pi() / (12 * kSqrt3)), Real(1e-16));
}

}  // namespace
}  // namespace kident
