#include "kident/exact_value.hpp"

#include <array>

#include <json.hpp>

#include "kident/closed_form.hpp"

namespace kident {
namespace {

struct CatalogEntry {
  const char* cli_name;
  SpecialPoint point;
};

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"1", {"z1", QuadExt(1), Rational(1, 4), 1}},
      {"3", {"z3", QuadExt(3), Rational(1, 6), 1}},
      {"1/3", {"z1/3", QuadExt(Rational(1, 3)), Rational(1, 3), 1}},
      {"cot2-pi-10", {"cot2_pi_10", QuadExt(5, 2, 5), Rational(1, 10), 5}},
      {"cot2-pi-12", {"cot2_pi_12", QuadExt(7, 4, 3), Rational(1, 12), 3}},
  };
  return entries;
}

// coeff / sqrt(radicand) with unit surd scale.
void canonical_term(QuadExt& coeff, Surd& surd, const QuadExt& radicand,
                    long field_d) {
  if (coeff.is_zero()) {
    coeff = 0;
    surd = Surd{};
    return;
  }
  const SurdForm form = surd_normalize(Surd{radicand, 1}, field_d);
  if (const auto* root = std::get_if<QuadExt>(&form)) {
    coeff /= *root;
    surd = Surd{};
  } else {
    const auto& s = std::get<Surd>(form);
    coeff /= QuadExt(s.scale);
    surd = Surd{s.radicand, 1};
  }
}

bool same_term(const QuadExt& c1, const Surd& s1, const QuadExt& c2,
               const Surd& s2) {
  if (c1.sign() != c2.sign()) return false;
  if (c1.is_zero()) return true;
  try {
    // Surd scales are folded into the comparison: c / (s sqrt r).
    const QuadExt lhs = c1 * c1 * s2.radicand * QuadExt(s2.scale * s2.scale);
    const QuadExt rhs = c2 * c2 * s1.radicand * QuadExt(s1.scale * s1.scale);
    return lhs == rhs;
  } catch (const FieldMismatch&) {
    return false;
  }
}

// ---- rendering -------------------------------------------------------------

struct Integerized {
  mpz_class a, b, den;  // (a + b sqrt d) / den
  long d;
};

Integerized integerize(const QuadExt& x) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), x.a().denominator().get_mpz_t(),
          x.b().denominator().get_mpz_t());
  return {(x.a() * Rational(l)).numerator(), (x.b() * Rational(l)).numerator(),
          l, x.d()};
}

std::string sqrt_of(const std::string& inner, bool compound, Format f) {
  switch (f) {
    case Format::text: return "sqrt(" + inner + ")";
    case Format::latex: return "\\sqrt{" + inner + "}";
    default: return compound ? "√(" + inner + ")" : "√" + inner;
  }
}

// Sum a + b sqrt d of integers, e.g. "50+22√5".
std::string integer_pair(const mpz_class& a, const mpz_class& b, long d, Format f) {
  std::string out;
  if (a != 0) out = a.get_str();
  if (b != 0) {
    if (b < 0) out += "-";
    else if (!out.empty()) out += "+";
    const mpz_class mag = abs(b);
    const std::string root = sqrt_of(std::to_string(d), false, f);
    if (mag != 1) out += mag.get_str() + (f == Format::text ? "*" : "");
    out += root;
  }
  return out.empty() ? "0" : out;
}

std::string radical(const QuadExt& radicand, Format f) {
  const Integerized r = integerize(radicand);
  return sqrt_of(integer_pair(r.a, r.b, r.d, f), !radicand.is_rational(), f);
}

std::string pi_symbol(Format f) {
  switch (f) {
    case Format::text: return "pi";
    case Format::latex: return "\\pi";
    default: return "π";
  }
}

std::string join_factors(const std::vector<std::string>& parts, Format f,
                         bool* compound) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty() && f == Format::text) out += "*";
    out += p;
  }
  if (compound) *compound = parts.size() > 1;
  return out;
}

std::string fraction(const std::string& num, const std::string& den,
                     bool den_compound, Format f) {
  if (den.empty()) return num;
  if (f == Format::latex) return "\\frac{" + num + "}{" + den + "}";
  return num + "/" + (den_compound ? "(" + den + ")" : den);
}

// |term| and its sign; the term is coeff (* pi) / sqrt(radicand).
std::pair<int, std::string> render_term(const QuadExt& coeff, const Surd& surd,
                                        bool with_pi, Format f) {
  std::vector<std::string> num, den;
  int sign = coeff.sign();
  const bool unit_surd = surd.radicand == QuadExt(1);

  if (!coeff.is_rational()) {
    Integerized c = integerize(coeff);
    if (c.a <= 0 && c.b <= 0) {
      c.a = -c.a;
      c.b = -c.b;
      sign = -1;
    } else {
      sign = 1;
    }
    num.push_back("(" + integer_pair(c.a, c.b, c.d, f) + ")");
    if (with_pi) num.push_back(pi_symbol(f));
    if (c.den != 1) den.push_back(c.den.get_str());
    if (!unit_surd) den.push_back(radical(surd.radicand, f));
  } else {
    const Rational mag = coeff.a().abs();
    mpz_class p = mag.numerator();
    const mpz_class q = mag.denominator();
    bool surd_up = false;
    if (!unit_surd && surd.radicand.is_rational() &&
        surd.radicand.a().is_integer()) {
      const mpz_class r = surd.radicand.a().numerator();
      if (mpz_divisible_p(p.get_mpz_t(), r.get_mpz_t())) {
        p /= r;
        surd_up = true;
      }
    }
    if (p != 1 || (!with_pi && !surd_up)) num.push_back(p.get_str());
    if (surd_up) num.push_back(radical(surd.radicand, f));
    if (with_pi) {
      if (f == Format::unicode && surd_up) num.insert(num.end() - 1, pi_symbol(f));
      else num.push_back(pi_symbol(f));
    }
    if (q != 1) den.push_back(q.get_str());
    if (!unit_surd && !surd_up) den.push_back(radical(surd.radicand, f));
  }

  bool den_compound = false;
  const std::string n = join_factors(num, f, nullptr);
  const std::string d = join_factors(den, f, &den_compound);
  return {sign, fraction(n, d, den_compound, f)};
}

nlohmann::json quad_to_json(const QuadExt& x) {
  return {{"a", x.a().fraction_str()}, {"b", x.b().fraction_str()}, {"d", x.d()}};
}

nlohmann::json term_to_json(const QuadExt& coeff, const Surd& surd) {
  return {{"coeff", quad_to_json(coeff)},
          {"surd", {{"radicand", quad_to_json(surd.radicand)},
                    {"scale", surd.scale.fraction_str()}}}};
}

QuadExt quad_from_json(const nlohmann::json& j) {
  return QuadExt(Rational::parse(j.at("a").get<std::string>()),
                 Rational::parse(j.at("b").get<std::string>()),
                 j.at("d").get<long>());
}

void term_from_json(const nlohmann::json& j, QuadExt& coeff, Surd& surd) {
  coeff = quad_from_json(j.at("coeff"));
  surd.radicand = quad_from_json(j.at("surd").at("radicand"));
  surd.scale = Rational::parse(j.at("surd").at("scale").get<std::string>());
}

}  // namespace

const std::vector<SpecialPoint>& special_points() {
  static const std::vector<SpecialPoint> points = [] {
    std::vector<SpecialPoint> out;
    for (const auto& e : catalog()) out.push_back(e.point);
    return out;
  }();
  return points;
}

const SpecialPoint& find_special_point(std::string_view name) {
  for (const auto& e : catalog())
    if (name == e.cli_name || name == e.point.label) return e.point;
  throw DomainError("unknown special point '" + std::string(name) +
                    "' (expected 1, 3, 1/3, cot2-pi-10 or cot2-pi-12)");
}

SpecialPoint make_special_point(const QuadExt& z, const Rational& theta_over_pi,
                                std::string label) {
  if (z.sign() <= 0) throw DomainError("special point: z must be positive");
  const Real zr = z.to_real();
  const Real theta = atan(1 / sqrt(zr)) / pi();
  if (abs(theta - theta_over_pi.to_real()) > Real(1e-25))
    throw DomainError("special point: ArcCot(sqrt z)/pi = " + to_string(theta, 20) +
                      " does not equal " + theta_over_pi.str());
  return {std::move(label), z, theta_over_pi, z.d()};
}

ExactValue ExactValue::make(const QuadExt& pi_coeff, const QuadExt& pi_radicand,
                            const QuadExt& alg_coeff, const QuadExt& alg_radicand,
                            long field_d) {
  ExactValue v{pi_coeff, {}, alg_coeff, {}};
  canonical_term(v.pi_coeff, v.pi_surd, pi_radicand, field_d);
  canonical_term(v.alg_coeff, v.alg_surd, alg_radicand, field_d);
  return v;
}

Real ExactValue::to_real() const {
  return pi_coeff.to_real() * pi() / pi_surd.to_real() +
         alg_coeff.to_real() / alg_surd.to_real();
}

bool ExactValue::same_value(const ExactValue& other) const {
  return same_term(pi_coeff, pi_surd, other.pi_coeff, other.pi_surd) &&
         same_term(alg_coeff, alg_surd, other.alg_coeff, other.alg_surd);
}

ExactValue eval_at_special(int n, const SpecialPoint& point) {
  const ClosedForm& cf = closed_form(n);
  const QuadExt& z = point.z;
  const QuadExt z1 = z + QuadExt(1);
  const auto lift = [](const Rational& c) { return QuadExt(c); };
  const QuadExt a = cf.A.evaluate(z, lift);
  const QuadExt b = cf.B.evaluate(z, lift);
  const QuadExt denom = (z * z1).pow(static_cast<unsigned>(n));
  const QuadExt pre(closed_form_prefactor(n));
  return ExactValue::make(pre * a * QuadExt(point.theta_over_pi) / denom, z * z1,
                          pre * b / denom, z1, point.field_d);
}

UnitCoefficients unit_coefficients(int k) {
  const ExactValue v = eval_at_special(k, find_special_point("z1"));
  // sqrt(2) * c / sqrt(r) is rational exactly when 2 / r is a rational square.
  const auto times_sqrt2 = [](const QuadExt& c, const Surd& s) {
    if (c.is_zero()) return Rational(0);
    Rational root;
    if (!c.is_rational() || !s.radicand.is_rational() ||
        !rational_sqrt(Rational(2) / (s.radicand.a() * s.scale * s.scale), root))
      throw NumericError("unit_coefficients: sqrt(2) I_k(1) is not in Q + Q pi");
    return c.a() * root;
  };
  return {times_sqrt2(v.alg_coeff, v.alg_surd), times_sqrt2(v.pi_coeff, v.pi_surd)};
}

Relation relation(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("relation: n and m must be nonnegative");
  const UnitCoefficients un = unit_coefficients(n);
  const UnitCoefficients um = unit_coefficients(m);
  if (um.b.is_zero())
    throw DomainError("relation: degenerate divisor, b_" + std::to_string(m) + " = 0");
  const Rational p = -(un.b / um.b);
  return {p, -un.a - p * um.a};
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "unicode") return Format::unicode;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  throw DomainError("unknown format '" + std::string(name) +
                    "' (expected text, unicode, latex or json)");
}

std::string render(const ExactValue& v, Format format, TermOrder order) {
  if (format == Format::json) {
    const nlohmann::json j = {{"pi", term_to_json(v.pi_coeff, v.pi_surd)},
                              {"alg", term_to_json(v.alg_coeff, v.alg_surd)}};
    return j.dump();
  }
  std::vector<std::pair<int, std::string>> terms;
  const auto push_alg = [&] {
    if (!v.alg_coeff.is_zero())
      terms.push_back(render_term(v.alg_coeff, v.alg_surd, false, format));
  };
  const auto push_pi = [&] {
    if (!v.pi_coeff.is_zero())
      terms.push_back(render_term(v.pi_coeff, v.pi_surd, true, format));
  };
  if (order == TermOrder::algebraic_first) {
    push_alg();
    push_pi();
  } else {
    push_pi();
    push_alg();
  }
  if (terms.empty()) return "0";
  const bool spaced = format != Format::latex;
  std::string out;
  for (const auto& [sign, body] : terms) {
    if (out.empty()) {
      out = (sign < 0 ? "-" : "") + body;
    } else {
      const std::string op = sign < 0 ? "-" : "+";
      out += spaced ? " " + op + " " : op;
      out += body;
    }
  }
  return out;
}

std::string render(const QuadExt& x, Format format) {
  if (format == Format::json) return quad_to_json(x).dump();
  const Integerized c = integerize(x);
  const std::string body = integer_pair(c.a, c.b, c.d, format);
  if (c.den == 1) return body;
  if (format == Format::latex) return "\\frac{" + body + "}{" + c.den.get_str() + "}";
  return (x.is_rational() ? body : "(" + body + ")") + "/" + c.den.get_str();
}

ExactValue exact_value_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ExactValue v;
    term_from_json(j.at("pi"), v.pi_coeff, v.pi_surd);
    term_from_json(j.at("alg"), v.alg_coeff, v.alg_surd);
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("exact value json: ") + e.what());
  }
}

}  // namespace kident
