// Command-line front end: evaluate I_n(z) both ways, print exact identities
// at special points, reproduce tables, compute relations, run the suite.
//
// Exit codes: 0 success, 2 usage or domain error, 3 numeric failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kident/closed_form.hpp"
#include "kident/exact_value.hpp"
#include "kident/integrals.hpp"
#include "kident/verification.hpp"

namespace {

using namespace kident;

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr const char* kTolEnv = "KIDENT_TOL";

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double default_tolerance() {
  if (const char* env = std::getenv(kTolEnv)) {
    const Real tol = parse_real(env);
    if (!(tol > 0)) throw DomainError(std::string(kTolEnv) + " must be positive");
    return static_cast<double>(tol);
  }
  return Precision{}.abs_tol;
}

std::string index_label(int n, Format f) {
  return f == Format::latex ? "I_{" + std::to_string(n) + "}" : "I_" + std::to_string(n);
}

std::string identity_line(int n, const SpecialPoint& p, Format f, TermOrder order) {
  const ExactValue v = eval_at_special(n, p);
  if (f == Format::json) {
    nlohmann::json j = {{"n", n},
                        {"point", p.label},
                        {"z", nlohmann::json::parse(render(p.z, Format::json))},
                        {"value", nlohmann::json::parse(render(v, Format::json))}};
    return j.dump();
  }
  return index_label(n, f) + "(" + render(p.z, f) + ") = " + render(v, f, order);
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

SpecialPoint resolve_point(const std::string& point, const std::string& custom_z,
                           const std::string& theta) {
  if (custom_z.empty()) {
    if (point.empty()) throw DomainError("one of --point or --custom-z is required");
    return find_special_point(point);
  }
  if (theta.empty()) throw DomainError("--custom-z needs --theta");
  // "a" or "a,b,d" for a + b sqrt(d)
  const auto parts = split(custom_z);
  QuadExt z;
  if (parts.size() == 1) {
    z = QuadExt(Rational::parse(parts[0]));
  } else if (parts.size() == 3) {
    z = QuadExt(Rational::parse(parts[0]), Rational::parse(parts[1]),
                std::stol(parts[2]));
  } else {
    throw DomainError("--custom-z expects 'a' or 'a,b,d'");
  }
  return make_special_point(z, Rational::parse(theta));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form and quadrature evaluation of I_n(z) = "
               "int_0^1 K(k) k / (z + k^2)^(n + 3/2) dk"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate I_n(z) numerically and/or exactly");
  int eval_n = 0;
  std::string eval_z, method = "both", eval_format = "text";
  double eval_tol = 0;
  int digits = 30;
  eval->add_option("--n", eval_n, "Family index")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--z", eval_z, "z > 0, decimal or p/q")->required();
  eval->add_option("--method", method)->check(CLI::IsMember({"numeric", "exact", "both"}));
  eval->add_option("--tol", eval_tol, "Quadrature tolerance (default $KIDENT_TOL or 1e-12)");
  eval->add_option("--format", eval_format)->check(CLI::IsMember({"text", "json"}));
  eval->add_option("--digits", digits)->check(CLI::Range(5, 36));

  // identity
  auto* identity = app.add_subcommand("identity", "Exact value of I_n at a special point");
  int id_n = 0;
  std::string point, custom_z, theta, id_format = "unicode", order_name = "algebraic";
  identity->add_option("--n", id_n)->required()->check(CLI::NonNegativeNumber);
  identity->add_option("--point", point, "1, 3, 1/3, cot2-pi-10 or cot2-pi-12");
  identity->add_option("--custom-z", custom_z, "User point 'a' or 'a,b,d' (a + b sqrt d)");
  identity->add_option("--theta", theta, "ArcCot(sqrt z)/pi for --custom-z, as p/q");
  identity->add_option("--format", id_format)
      ->check(CLI::IsMember({"text", "unicode", "latex", "json"}));
  identity->add_option("--order", order_name, "Term order")
      ->check(CLI::IsMember({"algebraic", "pi"}));

  // table
  auto* table = app.add_subcommand("table", "Identities for n = 0..max-n at each point");
  int max_n = 3;
  std::string points = "1", table_format = "unicode";
  table->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
  table->add_option("--points", points, "Comma-separated special points");
  table->add_option("--format", table_format)
      ->check(CLI::IsMember({"text", "unicode", "latex", "json"}));

  // relation
  auto* rel = app.add_subcommand("relation", "P, Q with sqrt2 I_n(1) + P sqrt2 I_m(1) + Q = 0");
  int rel_n = 0, rel_m = 0;
  std::string rel_format = "text";
  rel->add_option("--n", rel_n)->required()->check(CLI::NonNegativeNumber);
  rel->add_option("--m", rel_m)->required()->check(CLI::NonNegativeNumber);
  rel->add_option("--format", rel_format)->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run the cross-verification suite");
  std::string config_path, verify_format = "text";
  bool serial = false;
  verify->add_option("--config", config_path, "JSON suite configuration");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--serial", serial, "Run sweeps on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int status = 0;
  try {
    if (*eval) {
      Precision prec;
      prec.abs_tol = eval_tol > 0 ? eval_tol : default_tolerance();
      const Rational z_exact = Rational::parse(eval_z);
      if (z_exact.sign() <= 0) throw DomainError("z must be positive");
      const Real z = z_exact.to_real();
      const std::string label = "I_" + std::to_string(eval_n) + "(" + z_exact.str() + ")";
      nlohmann::json j = {{"n", eval_n}, {"z", z_exact.fraction_str()}};
      Real numeric = 0, exact = 0;
      const bool want_numeric = method != "exact", want_exact = method != "numeric";
      bool converged = true;
      if (want_numeric) {
        const auto r = integral_In_numeric({eval_n, z}, prec);
        numeric = r.value;
        converged = r.converged;
        j["numeric"] = {{"value", to_string(r.value, digits)},
                        {"error_estimate", static_cast<double>(r.error_estimate)},
                        {"levels", r.levels_used},
                        {"evaluations", r.evaluations},
                        {"converged", r.converged}};
        if (eval_format == "text")
          out << label << " numeric = " << to_string(r.value, digits)
              << "  (error estimate " << to_string(r.error_estimate, 3) << ", levels "
              << r.levels_used << ", evaluations " << r.evaluations
              << (r.converged ? "" : ", TOLERANCE NOT REACHED") << ")\n";
      }
      if (want_exact) {
        exact = In_exact_real(eval_n, z);
        j["exact"] = to_string(exact, digits);
        if (eval_format == "text")
          out << label << " exact   = " << to_string(exact, digits) << "\n";
      }
      if (want_numeric && want_exact) {
        const Real diff = abs(numeric - exact);
        j["difference"] = static_cast<double>(diff);
        if (eval_format == "text") out << "|numeric - exact| = " << to_string(diff, 3) << "\n";
      }
      if (eval_format == "json") out << j.dump() << "\n";
      if (!converged) status = kExitNumeric;
    } else if (*identity) {
      const SpecialPoint p = resolve_point(point, custom_z, theta);
      out << identity_line(id_n, p, parse_format(id_format),
                           order_name == "pi" ? TermOrder::pi_first
                                              : TermOrder::algebraic_first)
          << "\n";
    } else if (*table) {
      const Format f = parse_format(table_format);
      std::vector<const SpecialPoint*> selected;
      for (const auto& name : split(points)) selected.push_back(&find_special_point(name));
      if (selected.empty()) throw DomainError("--points is empty");
      for (const auto* p : selected)
        for (int n = 0; n <= max_n; ++n)
          out << identity_line(n, *p, f, TermOrder::algebraic_first) << "\n";
    } else if (*rel) {
      const Relation r = relation(rel_n, rel_m);
      if (rel_format == "json")
        out << nlohmann::json{{"n", rel_n}, {"m", rel_m}, {"P", r.P.fraction_str()},
                              {"Q", r.Q.fraction_str()}}.dump()
            << "\n";
      else
        out << "P = " << r.P << ", Q = " << r.Q << "\n";
    } else if (*verify) {
      SuiteConfig config = SuiteConfig::defaults();
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw DomainError("cannot read config file " + config_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        config = SuiteConfig::from_json(buffer.str());
      }
      if (serial) config.execution = Execution::serial;
      const SuiteReport report = run_suite(config);
      if (verify_format == "json") {
        out << reports_to_json(report.reports) << "\n";
      } else {
        out << reports_to_text(report.reports);
        out << (report.all_acceptable() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << " ("
            << report.seconds << " s)\n";
      }
      if (!report.all_acceptable()) status = kExitNumeric;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DivisionByZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FieldMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }

  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    file << out.str();
  }
  return status;
}
