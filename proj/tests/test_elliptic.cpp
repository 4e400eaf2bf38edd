#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "kident/elliptic.hpp"
#include "kident/tanh_sinh.hpp"

namespace kident {
namespace {

// K(k) by quadrature of the trigonometric form, which has no endpoint
// singularity; independent of the AGM path.
Real k_by_quadrature(const Real& k) {
  const auto r = tanh_sinh_integrate(
      [&](const Real& phi) {
        const Real ks = k * sin(phi);
        return 1 / sqrt((1 - ks) * (1 + ks));
      },
      Real(0), pi() / 2, Precision{1e-28, 64, 14});
  EXPECT_TRUE(r.converged);
  return r.value;
}

TEST(Agm, FixedPoint) { EXPECT_EQ(agm(Real(1), Real(1)), Real(1)); }

TEST(Agm, FourHandStepsOfOneAndHalf) {
  long double a = 1.0L, b = 0.5L;
  for (int i = 0; i < 4; ++i) {
    const long double next = (a + b) / 2;
    b = std::sqrt(a * b);
    a = next;
  }
  const Real m = agm(Real(1), Real(0.5));
  EXPECT_GT(m, Real(0.5));
  EXPECT_LT(m, Real(1));
  EXPECT_NEAR(static_cast<double>(m), static_cast<double>((a + b) / 2), 1e-15);
  // Frozen from a 30-digit reference evaluation.
  EXPECT_LT(abs(m - Real("0.728395515523453434593216191632")), Real(1e-30));
}

TEST(Agm, HomogeneousOfDegreeOne) {
  const Precision tight{1e-30, 64, 12};
  EXPECT_LT(abs(agm(Real(2), Real(8), tight) - 2 * agm(Real(1), Real(4), tight)),
            Real(1e-28));
}

TEST(Agm, RejectsNonPositive) {
  EXPECT_THROW(agm(Real(0), Real(1)), DomainError);
  EXPECT_THROW(agm(Real(1), Real(-2)), DomainError);
}

TEST(Agm, ReportsNonConvergence) {
  EXPECT_THROW(agm(Real(1), Real(1e-30), Precision{1e-12, 2, 12}), NumericError);
}

TEST(Agm, IteratesBracketAndContract) {
  const auto steps = agm_iterates(Real(1), Real(1e-6), Precision{1e-30, 64, 12});
  ASSERT_GT(steps.size(), 3u);
  for (size_t i = 1; i < steps.size(); ++i) {
    const auto& [a, b] = steps[i];
    const auto& [pa, pb] = steps[i - 1];
    EXPECT_LE(b, a);
    EXPECT_LE(a - b, (pa - pb) / 2);
  }
}

TEST(EllipK, AtZero) { EXPECT_LT(abs(ellip_k(Real(0)) - pi() / 2), Real(1e-32)); }

TEST(EllipK, HalfAgainstQuadratureAndReference) {
  const Real k = ellip_k(Real(0.5));
  EXPECT_LT(abs(k - k_by_quadrature(Real(0.5))), Real(1e-20));
  EXPECT_LT(abs(k - Real("1.6857503548125960428712036578")), Real(1e-27));
}

TEST(EllipK, AgreesWithQuadratureOracle) {
  for (double k : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    SCOPED_TRACE(k);
    EXPECT_LE(abs(ellip_k(Real(k)) - k_by_quadrature(Real(k))), Real(1e-10));
  }
}

TEST(EllipK, LogarithmicAsymptoteNearOne) {
  const Real k = 1 - Real(1e-8);
  const Real asymptote = log(4 / sqrt((1 - k) * (1 + k)));
  const Real value = ellip_k(k);
  EXPECT_LT(abs(value - asymptote) / asymptote, Real(5e-4));
}

TEST(EllipK, DomainErrors) {
  EXPECT_THROW(ellip_k(Real(1)), DomainError);
  EXPECT_THROW(ellip_k(Real(1.5)), DomainError);
  EXPECT_THROW(ellip_k(Real(-0.1)), DomainError);
}

TEST(EllipK, MonotoneAndBoundedBelowOnRandomPairs) {
  std::mt19937_64 rng(20191122);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    double k1 = u(rng), k2 = u(rng);
    if (k1 == k2) continue;
    if (k1 > k2) std::swap(k1, k2);
    const Real v1 = ellip_k(Real(k1)), v2 = ellip_k(Real(k2));
    EXPECT_LT(v1, v2) << k1 << " " << k2;
    EXPECT_GT(v1, pi() / 2) << k1;
  }
}

}  // namespace
}  // namespace kident
