#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "psum/faulhaber.hpp"
#include "psum/integer.hpp"
#include "psum/polynomial.hpp"
#include "psum/power_sums.hpp"
#include "psum/rational.hpp"
#include "psum/triangles.hpp"
#include "psum/verify.hpp"

namespace {

struct TriangleArgs {
  std::string seq = "R";
  long rows = 6;
  std::string format = "table";
  long diag_ratio = -1;
};

int run_triangle(const TriangleArgs& args) {
  if (args.diag_ratio >= 0) {
    // No closed form is asserted for s >= 5; print the observed ratios
    // R(k,k-s) / ((2k)! (k-s)) so the pattern can be eyeballed instead.
    long s = args.diag_ratio;
    if (args.seq != "R")
      throw std::invalid_argument("--diag-ratio applies to the R triangle");
    if (args.rows < s + 1)
      throw std::invalid_argument("--diag-ratio needs --rows >= s+1");
    for (long k = s + 1; k <= args.rows; ++k) {
      psum::Rational ratio(psum::r_number(k, k - s),
                           psum::factorial(psum::Integer(2 * k)) *
                               psum::Integer(k - s));
      std::cout << "k=" << k << " R(k,k-" << s << ")/((2k)!(k-" << s
                << ")) = " << ratio.str() << "\n";
    }
    return 0;
  }
  psum::Triangle t =
      psum::triangle_rows(psum::family_from_string(args.seq), args.rows);
  if (args.format == "table")
    std::cout << psum::to_table(t);
  else if (args.format == "csv")
    std::cout << psum::to_csv(t);
  else if (args.format == "json")
    std::cout << psum::to_json(t) << "\n";
  else if (args.format == "bfile")
    std::cout << psum::to_bfile(t);
  else
    throw std::invalid_argument("unknown format: " + args.format);
  return 0;
}

struct EvalArgs {
  std::string sum = "S";
  long k = 1;
  long n = 0;
  std::string method = "brute";
};

int run_eval(const EvalArgs& args) {
  psum::EvalResult result =
      psum::evaluate(psum::sum_kind_from_string(args.sum),
                     psum::eval_method_from_string(args.k, args.method),
                     args.k, args.n);
  if (result.scaled)
    std::cout << "scaled=" << *result.scaled << " value=" << result.value
              << "\n";
  else
    std::cout << result.value << "\n";
  return 0;
}

struct FaulhaberArgs {
  long k = 1;
  std::string coeffs = "b";
  std::string route;
};

int run_faulhaber(const FaulhaberArgs& args) {
  psum::FaulhaberKind kind = psum::faulhaber_kind_from_string(args.coeffs);
  if (!args.route.empty() && kind != psum::FaulhaberKind::c)
    throw std::invalid_argument("--route only selects among the c formulas");
  psum::FaulhaberCoeffs coeffs;
  switch (kind) {
    case psum::FaulhaberKind::b:
      coeffs = psum::faulhaber_b(args.k);
      break;
    case psum::FaulhaberKind::c:
      coeffs = psum::faulhaber_c(
          args.k, args.route.empty()
                      ? psum::CRoute::LegendreStirling
                      : psum::c_route_from_string(args.route));
      break;
    case psum::FaulhaberKind::d:
      coeffs = psum::faulhaber_d(args.k);
      break;
  }
  for (size_t i = 0; i < coeffs.values.size(); ++i) {
    if (i > 0) std::cout << ", ";
    std::cout << coeffs.values[i].str();
  }
  std::cout << "\n";
  return 0;
}

struct BernoulliArgs {
  long upto = 4;
  std::string method = "recurrence";
};

int run_bernoulli(const BernoulliArgs& args) {
  if (args.upto < 0) throw std::invalid_argument("--upto must be >= 0");
  std::vector<psum::Rational> values;
  if (args.method == "recurrence") {
    values = psum::bernoulli_numbers(args.upto);
  } else if (args.method == "r-formula") {
    // Even indices from the triangle formula; B_1 and the vanishing odd
    // values are fixed by convention.
    for (long i = 0; i <= args.upto; ++i) {
      if (i == 0)
        values.emplace_back(1);
      else if (i == 1)
        values.emplace_back(psum::Integer(-1), psum::Integer(2));
      else if (i % 2 == 1)
        values.emplace_back(0);
      else
        values.push_back(psum::bernoulli_even_via_r(i / 2));
    }
  } else {
    throw std::invalid_argument("unknown method: " + args.method);
  }
  for (long i = 0; i <= args.upto; ++i) {
    if (i > 0) std::cout << ' ';
    std::cout << "B_" << i << '=' << values[static_cast<size_t>(i)].str();
  }
  std::cout << "\n";
  return 0;
}

struct PolyArgs {
  std::string which = "Q";
  long k = -1;
  long m = -1;
};

int run_poly(const PolyArgs& args) {
  psum::Polynomial p;
  if (args.which == "Q") {
    if (args.k < 1 || args.m < 1)
      throw std::invalid_argument("Q needs --k and --m");
    p = psum::q_polynomial(args.k, args.m);
  } else if (args.which == "F") {
    if (args.m < 1) throw std::invalid_argument("F needs --m >= 1");
    p = psum::f_polynomial(args.m);
  } else if (args.which == "G") {
    if (args.m < 1) throw std::invalid_argument("G needs --m >= 1");
    p = psum::g_polynomial(args.m);
  } else if (args.which == "bernoulli") {
    if (args.k < 0) throw std::invalid_argument("bernoulli needs --k >= 0");
    p = psum::bernoulli_polynomial(args.k);
  } else {
    throw std::invalid_argument("unknown polynomial family: " + args.which);
  }
  std::cout << p.str() << "\n";
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  long max_k = 8;
  long max_n = 50;
  std::string json_path;
  bool list = false;
};

int run_verify(const VerifyArgs& args) {
  if (args.list) {
    for (const auto& spec : psum::list_checks())
      std::cout << spec.name << "  [" << spec.suite << "]  " << spec.anchor
                << "\n";
    return 0;
  }
  psum::VerificationReport report =
      psum::run_suite(args.suite, {args.max_k, args.max_n});
  std::cout << psum::report_to_table(report);
  if (!args.json_path.empty()) {
    std::ofstream out(args.json_path);
    if (!out)
      throw std::runtime_error("cannot write report to " + args.json_path);
    out << psum::report_to_json(report);
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact power-sum triangles, closed forms and identity checks"};
  app.require_subcommand(1);

  TriangleArgs triangle_args;
  CLI::App* triangle = app.add_subcommand(
      "triangle", "print one of the R, U, u, Ps or salie triangles");
  triangle->add_option("--seq", triangle_args.seq, "family: R U u Ps salie");
  triangle->add_option("--rows", triangle_args.rows, "last row to print")
      ->check(CLI::NonNegativeNumber);
  triangle->add_option("--format", triangle_args.format,
                       "table, csv, json or bfile");
  triangle->add_option("--diag-ratio", triangle_args.diag_ratio,
                       "report R(k,k-s)/((2k)!(k-s)) for this s instead");

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a power sum");
  eval->add_option("--sum", eval_args.sum, "S, T or omega");
  eval->add_option("--k", eval_args.k, "exponent")->required();
  eval->add_option("--n", eval_args.n, "upper limit")->required();
  eval->add_option("--method", eval_args.method,
                   "brute, theorem1, knuth, qform, fform, bernoulli, "
                   "recursive or closed");

  FaulhaberArgs faulhaber_args;
  CLI::App* faulhaber =
      app.add_subcommand("faulhaber", "Faulhaber coefficient vector for k");
  faulhaber->add_option("--k", faulhaber_args.k, "half-degree index")
      ->required();
  faulhaber->add_option("--coeffs", faulhaber_args.coeffs, "b, c or d");
  faulhaber->add_option("--route", faulhaber_args.route,
                        "c only: legendre_stirling, relation or gessel_viennot");

  BernoulliArgs bernoulli_args;
  CLI::App* bernoulli =
      app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_upto");
  bernoulli->add_option("--upto", bernoulli_args.upto, "last index")
      ->required();
  bernoulli->add_option("--method", bernoulli_args.method,
                        "recurrence or r-formula");

  PolyArgs poly_args;
  CLI::App* poly =
      app.add_subcommand("poly", "print a Q, F, G or Bernoulli polynomial");
  poly->add_option("--which", poly_args.which, "Q, F, G or bernoulli");
  poly->add_option("--k", poly_args.k, "k index (Q, bernoulli)");
  poly->add_option("--m", poly_args.m, "m index (Q, F, G)");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--suite", verify_args.suite,
                     "all, core, appendix, bernoulli, faulhaber, triangles or "
                     "a single check name");
  verify->add_option("--max-k", verify_args.max_k, "inclusive k bound")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-n", verify_args.max_n, "inclusive n bound")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--json", verify_args.json_path,
                     "also write the report as JSON to this path");
  verify->add_flag("--list", verify_args.list,
                   "list registered checks and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (triangle->parsed()) return run_triangle(triangle_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (faulhaber->parsed()) return run_faulhaber(faulhaber_args);
    if (bernoulli->parsed()) return run_bernoulli(bernoulli_args);
    if (poly->parsed()) return run_poly(poly_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
