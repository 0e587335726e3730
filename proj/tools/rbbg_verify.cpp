// rbbg-verify: sweeps and spot checks of the hypergeometric identity
// catalog.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error,
// 3 numerical non-convergence.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rbbg/catalog.hpp"
#include "rbbg/errors.hpp"
#include "rbbg/harness.hpp"

namespace {

int write_report(const rbbg::SweepReport& report, const std::string& format, const std::string& out_path) {
  std::cout << rbbg::to_text(report);
  if (!format.empty() || !out_path.empty()) {
    const std::string body = format == "csv" ? rbbg::to_csv(report) : rbbg::to_json(report);
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out || !(out << body)) throw rbbg::UsageError("cannot write report to '" + out_path + "'");
    }
  }
  return report.pass ? rbbg::kExitPass : rbbg::kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for Gauss 2F1 transformations and closed-form evaluations"};
  app.require_subcommand(1);

  std::string id;
  std::optional<double> min_value;
  std::optional<double> max_value;
  int samples = 200;
  std::optional<double> tol;
  std::string out_path;
  std::string format;
  auto* verify = app.add_subcommand("verify", "Sweep an identity, parametric family or ratio law over a grid");
  verify->add_option("id", id, "Catalog id")->required();
  verify->add_option("--min", min_value, "Lower end of the sweep");
  verify->add_option("--max", max_value, "Upper end of the sweep");
  verify->add_option("--samples", samples, "Number of grid points");
  verify->add_option("--tol", tol, "Pass threshold on the maximal relative residual");
  verify->add_option("--out", out_path, "Write the report to FILE");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));

  std::optional<double> a_value;
  int digits = 17;
  auto* eval = app.add_subcommand("eval", "Compare the engine against a closed form, ratio law or identity");
  eval->add_option("id", id, "Catalog id")->required();
  eval->add_option("--a", a_value, "Family parameter a (or p / x for identities)");
  eval->add_option("--digits", digits, "Significant digits for the values")->check(CLI::Range(1, 17));

  int n = 0;
  double singular_tol = 1e-14;
  auto* singular = app.add_subcommand("singular", "Solve K(k')/K(k) = sqrt(n) for x_n = k^2");
  singular->add_option("--n", n, "Order n >= 1")->required();
  singular->add_option("--tol", singular_tol, "Residual tolerance");

  std::string figure_id;
  int figure_samples = rbbg::kDefaultFigureSamples;
  auto* figure = app.add_subcommand("figure", "Write the CSV data behind a figure");
  figure->add_option("fig-id", figure_id, "One of 1L 1R 2L 2R 3L 3R 4")->required();
  figure->add_option("--out", out_path, "Output CSV file")->required();
  figure->add_option("--samples", figure_samples, "Number of abscissa samples");

  auto* list = app.add_subcommand("list", "List every catalog id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? rbbg::kExitPass : rbbg::kExitUsage;
  }

  try {
    if (*verify) {
      rbbg::SweepOptions options{min_value, max_value, samples, tol};
      return write_report(rbbg::run_verify(id, options), format, out_path);
    }
    if (*eval) {
      const rbbg::EvalRecord record = rbbg::run_eval(id, a_value);
      std::cout << rbbg::format_eval(record, digits);
      return record.pass ? rbbg::kExitPass : rbbg::kExitFail;
    }
    if (*singular) {
      std::cout << rbbg::format_singular(rbbg::run_singular(n, singular_tol));
      return rbbg::kExitPass;
    }
    if (*figure) {
      rbbg::emit_figure(figure_id, out_path, figure_samples);
      return rbbg::kExitPass;
    }
    if (*list) {
      for (const std::string& entry : rbbg::catalog_ids()) std::cout << entry << '\n';
      return rbbg::kExitPass;
    }
  } catch (const rbbg::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return rbbg::kExitUsage;
  } catch (const rbbg::NonConvergenceError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return rbbg::kExitNumerical;
  } catch (const std::domain_error& e) {
    // Parameters that hit a pole or leave a map's domain.
    std::cerr << "usage error: " << e.what() << '\n';
    return rbbg::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return rbbg::kExitUsage;
  } catch (const std::runtime_error& e) {
    // Unwritable --out path.
    std::cerr << "usage error: " << e.what() << '\n';
    return rbbg::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rbbg::kExitNumerical;
  }
  return rbbg::kExitUsage;
}
