#include "rbbg/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rbbg/catalog.hpp"
#include "rbbg/elliptic.hpp"
#include "rbbg/errors.hpp"
#include "rbbg/maps.hpp"

namespace rbbg {
namespace {

struct PointResult {
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  bool route_ok = true;
};

using PointEvaluator = std::function<PointResult(double)>;

std::vector<double> uniform_grid(double lo, double hi, int samples) {
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    grid[static_cast<std::size_t>(i)] = i == samples - 1 ? hi : lo + (hi - lo) * i / (samples - 1);
  }
  return grid;
}

// Evaluates every grid point, spreading the work over the available
// hardware threads. Results are stored by index; the first failure (in
// grid order) is rethrown after all workers finish.
std::vector<PointResult> evaluate_grid(const std::vector<double>& grid, const PointEvaluator& eval) {
  std::vector<PointResult> results(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(grid.size(), 1));
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < grid.size(); i += workers) {
      try {
        results[i] = eval(grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

struct SweepPlan {
  Interval domain;
  double default_tol;
  PointEvaluator evaluate;
};

SweepPlan plan_for(std::string_view id) {
  EntryKind kind;
  try {
    kind = kind_of(id);
  } catch (const UnknownIdError&) {
    throw UsageError("unknown id '" + std::string(id) + "'");
  }
  switch (kind) {
    case EntryKind::Identity: {
      const IdentityEntry& entry = identity_entry(id);
      return {entry.domain, entry.default_tol, [&entry](double x) {
                const IdentitySides s = entry.evaluate(x, kDefaultTol);
                return PointResult{s.abs_residual(), s.rel_residual(), true};
              }};
    }
    case EntryKind::ClosedForm: {
      const ClosedFormEntry& entry = closed_form_entry(id);
      if (!entry.parametric) {
        throw UsageError(entry.id + " is a single closed-form value; check it with `eval " + entry.id + "`");
      }
      return {entry.a_domain, 1e-9, [id = entry.id](double a) {
                const ClosedFormCheck c = check_closed_form(id, a);
                return PointResult{c.abs_residual(), c.rel_residual(), c.route_ok};
              }};
    }
    case EntryKind::Ratio: {
      const RatioEntry& entry = ratio_entry(id);
      return {entry.a_domain, 1e-9, [family = entry.family](double a) {
                const double diff = std::fabs(ratio_numeric(family, a) - ratio_law(family, a));
                return PointResult{diff, diff, true};
              }};
    }
  }
  throw UsageError("unknown id '" + std::string(id) + "'");
}

std::string describe(const Interval& d) {
  std::ostringstream os;
  os << (d.lo_open ? '(' : '[') << format_double(d.lo) << ", " << format_double(d.hi) << (d.hi_open ? ')' : ']');
  return os.str();
}

double resolve_lower(const Interval& d, std::optional<double> requested) {
  const double x = requested.value_or(d.lo);
  if (!std::isfinite(x) || x < d.lo) throw UsageError("--min " + format_double(x) + " lies outside " + describe(d));
  if (x == d.lo && d.lo_open) return d.lo + kEndpointEpsilon;
  return x;
}

double resolve_upper(const Interval& d, std::optional<double> requested) {
  const double x = requested.value_or(d.hi);
  if (!std::isfinite(x) || x > d.hi) throw UsageError("--max " + format_double(x) + " lies outside " + describe(d));
  if (x == d.hi && d.hi_open) return d.hi - kEndpointEpsilon;
  return x;
}

template <typename F>
std::vector<std::vector<double>> tabulate(double lo, double hi, int samples, F&& row) {
  std::vector<std::vector<double>> rows;
  for (double x : uniform_grid(lo, hi, samples)) {
    std::vector<double> values;
    try {
      values = row(x);
    } catch (const std::domain_error&) {
      continue;  // pole of a map at this abscissa
    }
    values.insert(values.begin(), x);
    if (std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
      rows.push_back(std::move(values));
    }
  }
  return rows;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

SweepReport run_verify(std::string_view id, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const SweepPlan plan = plan_for(id);
  if (options.samples < 2) throw UsageError("--samples must be at least 2");
  const double lo = resolve_lower(plan.domain, options.min);
  const double hi = resolve_upper(plan.domain, options.max);
  if (!(lo < hi)) throw UsageError("need min < max inside " + describe(plan.domain));
  const double tol = options.tol.value_or(plan.default_tol);
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");

  const std::vector<double> grid = uniform_grid(lo, hi, options.samples);
  const std::vector<PointResult> results = evaluate_grid(grid, plan.evaluate);

  SweepReport report;
  report.identity_id = std::string(id);
  report.samples = options.samples;
  report.domain_min = lo;
  report.domain_max = hi;
  report.tol = tol;
  report.worst_point = grid.front();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const PointResult& r = results[i];
    report.max_abs_residual = std::max(report.max_abs_residual, r.abs_residual);
    if (r.rel_residual > report.max_rel_residual) {
      report.max_rel_residual = r.rel_residual;
      report.worst_point = grid[i];
    }
    report.routes_ok = report.routes_ok && r.route_ok;
  }
  report.pass = report.max_rel_residual <= tol && report.routes_ok;
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  j["samples"] = r.samples;
  j["domain"] = {{"min", r.domain_min}, {"max", r.domain_max}};
  j["tol"] = r.tol;
  j["max_abs_residual"] = r.max_abs_residual;
  j["max_rel_residual"] = r.max_rel_residual;
  j["worst_point"] = r.worst_point;
  j["routes_ok"] = r.routes_ok;
  j["pass"] = r.pass;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

// Timing is left out so that repeated runs write byte-identical files.
std::string to_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "identity_id,samples,domain_min,domain_max,tol,max_abs_residual,max_rel_residual,worst_point,routes_ok,"
        "pass\n";
  os << r.identity_id << ',' << r.samples << ',' << format_double(r.domain_min) << ','
     << format_double(r.domain_max) << ',' << format_double(r.tol) << ',' << format_double(r.max_abs_residual)
     << ',' << format_double(r.max_rel_residual) << ',' << format_double(r.worst_point) << ','
     << (r.routes_ok ? "true" : "false") << ',' << (r.pass ? "true" : "false") << '\n';
  return os.str();
}

std::string to_text(const SweepReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.identity_id << "  samples=" << r.samples << "  range=["
     << format_double(r.domain_min) << ", " << format_double(r.domain_max) << "]"
     << std::setprecision(3) << std::scientific << "  max_abs=" << r.max_abs_residual
     << "  max_rel=" << r.max_rel_residual << "  tol=" << r.tol << std::defaultfloat
     << std::setprecision(17) << "  worst=" << r.worst_point << "  routes=" << (r.routes_ok ? "ok" : "MISMATCH")
     << "  elapsed_ms=" << r.elapsed_ms << '\n';
  return os.str();
}

EvalRecord run_eval(std::string_view id, std::optional<double> a) {
  EntryKind kind;
  try {
    kind = kind_of(id);
  } catch (const UnknownIdError&) {
    throw UsageError("unknown id '" + std::string(id) + "'");
  }
  EvalRecord rec{std::string(id), a, 0.0, 0.0, 0.0, 0.0, "", true, 1e-9, false};
  switch (kind) {
    case EntryKind::ClosedForm: {
      const ClosedFormEntry& entry = closed_form_entry(id);
      if (entry.parametric && !a) throw UsageError(entry.id + " needs --a");
      if (!entry.parametric && a) throw UsageError(entry.id + " takes no --a");
      const ClosedFormCheck c = check_closed_form(id, a);
      rec.reference = c.closed_form;
      rec.engine = c.engine.value;
      rec.abs_residual = c.abs_residual();
      rec.rel_residual = c.rel_residual();
      rec.route = std::string(to_string(c.engine.route));
      rec.route_ok = c.route_ok;
      break;
    }
    case EntryKind::Ratio: {
      if (!a) throw UsageError(std::string(id) + " needs --a");
      const RatioFamily family = ratio_family(id);
      const RatioParts parts = ratio_parts(family, *a);
      rec.reference = ratio_law(family, *a);
      rec.engine = parts.ratio();
      rec.abs_residual = std::fabs(rec.engine - rec.reference);
      rec.rel_residual = rec.abs_residual;
      rec.route = std::string(to_string(parts.numerator.route)) + "/" + std::string(to_string(parts.denominator.route));
      break;
    }
    case EntryKind::Identity: {
      const IdentityEntry& entry = identity_entry(id);
      if (!a) throw UsageError(entry.id + " needs --a (the value of " + entry.parameter + ")");
      if (!entry.domain.contains(*a)) throw UsageError(entry.id + ": --a outside " + describe(entry.domain));
      const IdentitySides s = entry.evaluate(*a, kDefaultTol);
      rec.reference = s.rhs;
      rec.engine = s.lhs;
      rec.abs_residual = s.abs_residual();
      rec.rel_residual = s.rel_residual();
      rec.route = std::string(to_string(s.lhs_route)) + "/" + std::string(to_string(s.rhs_route));
      rec.tol = entry.default_tol;
      break;
    }
  }
  rec.pass = rec.rel_residual <= rec.tol && rec.route_ok;
  return rec;
}

std::string format_eval(const EvalRecord& r, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits);
  os << "id            " << r.id << '\n';
  if (r.a) os << "a             " << *r.a << '\n';
  os << "reference     " << r.reference << '\n';
  os << "engine        " << r.engine << '\n';
  os << std::scientific << std::setprecision(3);
  os << "abs_residual  " << r.abs_residual << '\n';
  os << "rel_residual  " << r.rel_residual << '\n';
  os << "route         " << r.route << (r.route_ok ? "" : "  (expected route not taken)") << '\n';
  os << "status        " << (r.pass ? "PASS" : "FAIL") << "  (tol " << r.tol << ")\n";
  return os.str();
}

SingularRecord run_singular(int n, double tol) {
  if (n < 1) throw UsageError("--n must be a positive integer");
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  const SingularValue v = singular_modulus(n, tol);
  SingularRecord rec{n, v.x_n, v.residual, std::nullopt};
  if (n == 9) rec.x9_deviation = std::fabs(v.x_n - x9_closed_form());
  return rec;
}

std::string format_singular(const SingularRecord& r) {
  std::ostringstream os;
  os << "n                " << r.n << '\n';
  os << "x_n              " << format_double(r.x_n) << '\n';
  os << std::scientific << std::setprecision(3);
  os << "ratio_residual   " << r.ratio_residual << '\n';
  if (r.x9_deviation) os << "x9_deviation     " << *r.x9_deviation << '\n';
  return os.str();
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"1L", "1R", "2L", "2R", "3L", "3R", "4"};
  return ids;
}

FigureSeries figure_series(std::string_view figure_id, int samples) {
  if (samples < 2) throw UsageError("--samples must be at least 2");
  const EscapeConstants& e = escape_points();
  const double open_lo = -0.5 + kEndpointEpsilon;
  const double open_hi = 1.0 - kEndpointEpsilon;
  FigureSeries s{std::string(figure_id), {}, {}};
  if (figure_id == "1L") {
    s.columns = {"p", "beta(p)", "beta(1/p)"};
    s.rows = tabulate(-3.0, 3.0, samples, [](double p) { return std::vector{beta(p), beta(1.0 / p)}; });
  } else if (figure_id == "1R") {
    s.columns = {"p", "alpha(p)", "1/alpha(1/p)"};
    s.rows = tabulate(-3.0, 3.0, samples, [](double p) { return std::vector{alpha(p), 1.0 / alpha(1.0 / p)}; });
  } else if (figure_id == "2L") {
    s.columns = {"p", "beta(p)", "alpha(p)"};
    s.rows = tabulate(e.p_star - 0.05, 0.99, samples, [](double p) { return std::vector{beta(p), alpha(p)}; });
  } else if (figure_id == "2R") {
    s.columns = {"p", "lhs", "rhs"};
    s.rows = tabulate(e.p_star, 0.99, samples, [](double p) {
      const IdentitySides sides = rbbg_sides(p, RbbgBranch::Direct);
      return std::vector{sides.lhs, sides.rhs};
    });
  } else if (figure_id == "3L") {
    s.columns = {"p", "beta(p)", "alpha(p)", "alpha_l(p)"};
    s.rows = tabulate(open_lo, open_hi, samples,
                      [](double p) { return std::vector{beta(p), alpha(p), alpha_ell(p)}; });
  } else if (figure_id == "3R") {
    s.columns = {"p", "lhs", "rhs"};
    s.rows = tabulate(open_lo, open_hi, samples, [](double p) {
      const IdentitySides sides = rbbg_sides(p);
      return std::vector{sides.lhs, sides.rhs};
    });
  } else if (figure_id == "4") {
    s.columns = {"a", "F(a,a+1/3;4/3-a;y0)", "F(a,a+1/3;4/3-a;y1)", "R3_numeric", "R3_law"};
    s.rows = tabulate(-1.0, 1.0, samples, [](double a) {
      const RatioParts parts = ratio_parts(RatioFamily::R3, a);
      return std::vector{parts.numerator.value, parts.denominator.value, parts.ratio(),
                         ratio_law(RatioFamily::R3, a)};
    });
  } else {
    throw UsageError("unknown figure id '" + std::string(figure_id) + "'");
  }
  return s;
}

void write_csv(const FigureSeries& series, std::ostream& out) {
  for (std::size_t i = 0; i < series.columns.size(); ++i) out << (i ? "," : "") << series.columns[i];
  out << '\n';
  for (const auto& row : series.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

void emit_figure(std::string_view figure_id, const std::string& out_path, int samples) {
  const FigureSeries series = figure_series(figure_id, samples);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  write_csv(series, out);
  if (!out) throw std::runtime_error("write to '" + out_path + "' failed");
}

}  // namespace rbbg
