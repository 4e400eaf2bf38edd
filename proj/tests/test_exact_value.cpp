#include <gtest/gtest.h>

#include "kident/closed_form.hpp"
#include "kident/exact_value.hpp"

namespace kident {
namespace {

const SpecialPoint& point(const char* name) { return find_special_point(name); }

TEST(SpecialPoints, Catalog) {
  ASSERT_EQ(special_points().size(), 5u);
  for (const auto& p : special_points()) {
    const Real theta = atan(1 / sqrt(p.z.to_real())) / pi();
    EXPECT_LT(abs(theta - p.theta_over_pi.to_real()), Real(1e-32)) << p.label;
  }
  EXPECT_EQ(point("cot2-pi-10").z, QuadExt(5, 2, 5));
  EXPECT_EQ(point("cot2_pi_12").field_d, 3);
  EXPECT_EQ(&point("1/3"), &point("z1/3"));
  EXPECT_THROW(point("7"), DomainError);
}

TEST(SpecialPoints, CustomPointsAreValidated) {
  // cot^2(pi/8) = 3 + 2 sqrt 2
  const SpecialPoint p = make_special_point(QuadExt(3, 2, 2), Rational(1, 8));
  EXPECT_EQ(p.field_d, 2);
  for (int n = 0; n <= 4; ++n)
    EXPECT_LT(abs(eval_at_special(n, p).to_real() - In_exact_real(n, p.z.to_real())),
              Real(1e-28));
  EXPECT_THROW(make_special_point(QuadExt(3, 2, 2), Rational(1, 7)), DomainError);
  EXPECT_THROW(make_special_point(QuadExt(-1), Rational(1, 4)), DomainError);
}

TEST(EvalAtSpecial, UnitTableExactly) {
  // sqrt 2 I_n(1) = a_n + b_n pi with the published rationals
  const Rational a[] = {0, Rational(1, 6), Rational(1, 6), Rational(121, 840)};
  const Rational b[] = {Rational(1, 4), Rational(1, 8), Rational(19, 240), Rational(9, 160)};
  for (int n = 0; n <= 3; ++n) {
    const ExactValue v = eval_at_special(n, point("z1"));
    EXPECT_EQ(v.pi_coeff, QuadExt(b[n]));
    EXPECT_EQ(v.alg_coeff, QuadExt(a[n]));
    EXPECT_EQ(v.pi_surd.radicand, QuadExt(2));
    if (n > 0) EXPECT_EQ(v.alg_surd.radicand, QuadExt(2));
    const UnitCoefficients u = unit_coefficients(n);
    EXPECT_EQ(u.a, a[n]);
    EXPECT_EQ(u.b, b[n]);
  }
}

TEST(EvalAtSpecial, NestedRadicalPoints) {
  const ExactValue v10 = eval_at_special(0, point("cot2-pi-10"));
  EXPECT_EQ(v10.pi_coeff, QuadExt(Rational(1, 10)));
  EXPECT_EQ(v10.pi_surd, (Surd{QuadExt(50, 22, 5), 1}));
  EXPECT_TRUE(v10.alg_coeff.is_zero());

  const ExactValue v12 = eval_at_special(0, point("cot2-pi-12"));
  EXPECT_EQ(v12.pi_coeff, QuadExt(Rational(1, 24)));
  EXPECT_EQ(v12.pi_surd, (Surd{QuadExt(26, 15, 3), 1}));
}

TEST(EvalAtSpecial, SecondIndexAtThreeCarriesRootThree) {
  const ExactValue v = eval_at_special(2, point("3"));
  EXPECT_EQ(v.alg_coeff, QuadExt(Rational(1, 180)));
  EXPECT_EQ(v.alg_surd.radicand, QuadExt(1));
  EXPECT_EQ(v.pi_coeff, QuadExt(Rational(11, 2880)));
  EXPECT_EQ(v.pi_surd.radicand, QuadExt(3));
}

TEST(EvalAtSpecial, AgreesWithFloatingClosedForm) {
  for (const auto& p : special_points())
    for (int n = 0; n <= 8; ++n)
      EXPECT_LT(abs(eval_at_special(n, p).to_real() - In_exact_real(n, p.z.to_real())),
                Real(1e-12))
          << p.label << " n=" << n;
}

TEST(EvalAtSpecial, SameValueComparesAcrossForms) {
  const ExactValue a = ExactValue::make(Rational(1, 12), 3, 0, 1);
  const ExactValue b = ExactValue::make(Rational(1, 4), Rational(27, 1), 0, 1);  // 1/(4 sqrt 27)
  EXPECT_TRUE(a.same_value(b));
  EXPECT_TRUE(a.same_value(eval_at_special(0, point("3"))));
  EXPECT_FALSE(a.same_value(ExactValue::make(Rational(1, 12), 2, 0, 1)));
  EXPECT_FALSE(a.same_value(ExactValue::make(Rational(-1, 12), 3, 0, 1)));
}

TEST(Relation, Examples) {
  for (int n = 0; n <= 5; ++n) {
    const Relation r = relation(n, n);
    EXPECT_EQ(r.P, Rational(-1));
    EXPECT_EQ(r.Q, Rational(0));
  }
  EXPECT_EQ(relation(1, 0).P, Rational(-1, 2));
  EXPECT_EQ(relation(1, 0).Q, Rational(-1, 6));
  EXPECT_EQ(relation(2, 0).P, Rational(-19, 60));
  EXPECT_EQ(relation(2, 0).Q, Rational(-1, 6));
  EXPECT_THROW(relation(-1, 0), DomainError);
}

TEST(Relation, ExactForAllPairsUpToTen) {
  for (int n = 0; n <= 10; ++n) {
    const UnitCoefficients un = unit_coefficients(n);
    for (int m = 0; m <= 10; ++m) {
      const UnitCoefficients um = unit_coefficients(m);
      ASSERT_FALSE(um.b.is_zero());
      const Relation r = relation(n, m);
      EXPECT_TRUE((un.b + r.P * um.b).is_zero());
      EXPECT_TRUE((un.a + r.P * um.a + r.Q).is_zero());
    }
  }
}

TEST(Render, TextAndUnicode) {
  EXPECT_EQ(render(eval_at_special(0, point("1")), Format::text), "pi/(4*sqrt(2))");
  EXPECT_EQ(render(eval_at_special(0, point("1")), Format::unicode), "π/(4√2)");
  EXPECT_EQ(render(ExactValue::make(0, 1, 0, 1), Format::text), "0");
  EXPECT_EQ(render(ExactValue::make(0, 1, 0, 1), Format::latex), "0");
  EXPECT_EQ(render(eval_at_special(1, point("3")), Format::unicode), "1/72 + 7π/(432√3)");
  EXPECT_EQ(render(eval_at_special(1, point("3")), Format::text),
            "1/72 + 7*pi/(432*sqrt(3))");
  EXPECT_EQ(render(eval_at_special(1, point("1/3")), Format::unicode), "3√3/8 + 5π/8");
  EXPECT_EQ(render(eval_at_special(1, point("1/3")), Format::text), "3*sqrt(3)/8 + 5*pi/8");
  EXPECT_EQ(render(eval_at_special(0, point("1/3")), Format::unicode), "π/2");
  EXPECT_EQ(render(eval_at_special(0, point("cot2-pi-10")), Format::unicode),
            "π/(10√(50+22√5))");
  EXPECT_EQ(render(eval_at_special(0, point("cot2-pi-12")), Format::text),
            "pi/(24*sqrt(26+15*sqrt(3)))");
}

TEST(Render, Latex) {
  EXPECT_EQ(render(eval_at_special(1, point("3")), Format::latex),
            "\\frac{1}{72}+\\frac{7\\pi}{432\\sqrt{3}}");
  EXPECT_EQ(render(eval_at_special(2, point("1/3")), Format::latex),
            "\\frac{9\\sqrt{3}}{10}+\\frac{177\\pi}{160}");
  EXPECT_EQ(render(eval_at_special(0, point("cot2-pi-10")), Format::latex),
            "\\frac{\\pi}{10\\sqrt{50+22\\sqrt{5}}}");
}

TEST(Render, TermOrderAndSigns) {
  const ExactValue v = eval_at_special(1, point("1"));
  EXPECT_EQ(render(v, Format::unicode, TermOrder::pi_first), "π/(8√2) + 1/(6√2)");
  const ExactValue neg = ExactValue::make(Rational(-1, 2), 1, Rational(3), 1);
  EXPECT_EQ(render(neg, Format::text), "3 - pi/2");
  EXPECT_EQ(render(neg, Format::text, TermOrder::pi_first), "-pi/2 + 3");
  EXPECT_EQ(render(neg, Format::latex), "3-\\frac{\\pi}{2}");
}

TEST(Render, FieldElements) {
  EXPECT_EQ(render(QuadExt(5, 2, 5), Format::unicode), "5+2√5");
  EXPECT_EQ(render(QuadExt(7, 4, 3), Format::text), "7+4*sqrt(3)");
  EXPECT_EQ(render(QuadExt(Rational(1, 3)), Format::unicode), "1/3");
  EXPECT_EQ(render(QuadExt(Rational(1, 3)), Format::latex), "\\frac{1}{3}");
  EXPECT_EQ(render(QuadExt(Rational(1, 2), Rational(-1, 2), 5), Format::unicode), "(1-√5)/2");
}

TEST(Render, JsonSchemaAndRoundTrip) {
  const ExactValue v = eval_at_special(1, point("3"));
  const std::string json = render(v, Format::json);
  EXPECT_NE(json.find("\"pi\""), std::string::npos);
  EXPECT_NE(json.find("\"alg\""), std::string::npos);
  EXPECT_NE(json.find("\"7/432\""), std::string::npos);
  EXPECT_NE(json.find("\"scale\":\"1/1\""), std::string::npos);
  for (const auto& p : special_points()) {
    for (int n = 0; n <= 6; ++n) {
      const ExactValue value = eval_at_special(n, p);
      EXPECT_EQ(exact_value_from_json(render(value, Format::json)), value) << p.label << n;
    }
  }
  EXPECT_THROW(exact_value_from_json("{\"pi\": 1}"), DomainError);
  EXPECT_THROW(exact_value_from_json("not json"), DomainError);
}

TEST(Render, ParseFormat) {
  EXPECT_EQ(parse_format("latex"), Format::latex);
  EXPECT_THROW(parse_format("html"), DomainError);
}

}  // namespace
}  // namespace kident
