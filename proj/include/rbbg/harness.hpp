#pragma once

// Front-end operations behind the rbbg-verify command line: identity
// sweeps, closed-form spot checks, the singular-modulus solver and the
// CSV emitters for the figure data.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rbbg/hyp2f1.hpp"

namespace rbbg {

/// Bad command-line input: unknown option value, domain violation, ...
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitNumerical = 3 };

/// Open endpoints of a sweep domain are pulled inward by this amount.
inline constexpr double kEndpointEpsilon = 1e-6;

struct SweepOptions {
  std::optional<double> min;
  std::optional<double> max;
  int samples = 200;
  std::optional<double> tol;  // defaults to the entry's tolerance
};

struct SweepReport {
  std::string identity_id;
  int samples = 0;
  double domain_min = 0.0;
  double domain_max = 0.0;
  double tol = 0.0;
  double max_abs_residual = 0.0;
  /// Relative to the reference side. Ratio laws cross zero, so for R1..R3
  /// this is the absolute residual.
  double max_rel_residual = 0.0;
  double worst_point = 0.0;
  bool routes_ok = true;
  bool pass = false;
  long long elapsed_ms = 0;
};

/// Uniform sweep of an identity (over p or x), a parametric closed-form
/// family or a ratio law (over a). Grid points are evaluated concurrently;
/// the reduction is taken in grid order so the report does not depend on
/// scheduling. Throws UsageError for bad ids or ranges and lets
/// NonConvergenceError through.
SweepReport run_verify(std::string_view id, const SweepOptions& options);

std::string to_json(const SweepReport& report);
/// Header plus one row; elapsed_ms is omitted so reruns are byte-identical.
std::string to_csv(const SweepReport& report);
std::string to_text(const SweepReport& report);

struct EvalRecord {
  std::string id;
  std::optional<double> a;
  double reference;  // closed form, ratio law or right-hand side
  double engine;     // 2F1 engine value (left-hand side for identities)
  double abs_residual;
  double rel_residual;
  std::string route;
  bool route_ok;
  double tol;
  bool pass;
};

/// Spot check of any catalog id. Closed forms take `a` for the parametric
/// families only; ratio laws and identities require it (for identities it
/// is the free variable p or x).
EvalRecord run_eval(std::string_view id, std::optional<double> a);
std::string format_eval(const EvalRecord& record, int digits);

struct SingularRecord {
  int n;
  double x_n;
  double ratio_residual;
  std::optional<double> x9_deviation;  // n = 9 only
};
SingularRecord run_singular(int n, double tol);
std::string format_singular(const SingularRecord& record);

struct FigureSeries {
  std::string figure_id;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

inline constexpr int kDefaultFigureSamples = 200;

/// Figure ids: 1L 1R 2L 2R 3L 3R 4. Rows with non-finite entries are
/// dropped; the abscissa is strictly increasing.
FigureSeries figure_series(std::string_view figure_id, int samples);
const std::vector<std::string>& figure_ids();

/// Shortest round-trip decimal rendering.
std::string format_double(double value);

void write_csv(const FigureSeries& series, std::ostream& out);
/// Throws std::runtime_error on I/O failure.
void emit_figure(std::string_view figure_id, const std::string& out_path, int samples);

}  // namespace rbbg
