#include "rbbg/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rbbg/compensated_sum.hpp"
#include "rbbg/errors.hpp"
#include "rbbg/special.hpp"

namespace rbbg {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Excess this far from an integer keeps Gamma(s) Gamma(-s) in the generic
// connection formula well conditioned.
constexpr double kMinIntegerDistance = 0.05;

// Window length and starting index for the boundary-point averaging.
constexpr int kAveragingWindow = 40;
constexpr long kAveragingStart = 64;

double terminating_length(const Hyp2F1Params& p) {
  // Terms of a terminating series vanish from index -a (or -b) on.
  double n = std::numeric_limits<double>::infinity();
  if (is_nonpositive_integer(p.a())) n = std::min(n, -p.a());
  if (is_nonpositive_integer(p.b())) n = std::min(n, -p.b());
  return n;
}

EvalResult sum_terminating(const Hyp2F1Params& p, double z) {
  const double last = terminating_length(p);
  CompensatedSum sum(1.0);
  double term = 1.0;
  for (double n = 0.0; n < last; n += 1.0) {
    term *= (p.a() + n) * (p.b() + n) / ((p.c() + n) * (n + 1.0)) * z;
    sum += term;
  }
  return {sum.value(), 0.0, Route::DirectSeries};
}

EvalResult sum_inside_disk(const Hyp2F1Params& p, double z, double tol) {
  if (z == 0.0) return {1.0, 0.0, Route::DirectSeries};
  CompensatedSum sum(1.0);
  double term = 1.0;
  const double abs_z = std::fabs(z);
  for (long n = 0; n < kMaxSeriesTerms; ++n) {
    const double dn = static_cast<double>(n);
    const double ratio = (p.a() + dn) * (p.b() + dn) / ((p.c() + dn) * (dn + 1.0)) * z;
    const double next = term * ratio;
    if (next == 0.0) return {sum.value(), 0.0, Route::DirectSeries};
    // Term ratios tend to |z|; bound the remaining geometric tail by the
    // larger of the current ratio and the limit.
    const double rho = std::max(std::fabs(ratio), abs_z);
    if (rho < 1.0 && std::fabs(next) / (1.0 - rho) <= tol) {
      return {sum.value(), std::fabs(next), Route::DirectSeries};
    }
    sum += next;
    term = next;
  }
  throw NonConvergenceError("eval_series: term cap reached before tolerance at z = " +
                            std::to_string(z));
}

// Iterated pairwise averaging of the window S_start .. S_{start+m}; each
// round is one step of the Euler transform of the remaining tail.
double averaged_tail(const std::vector<double>& partial, long start) {
  std::vector<double> w(partial.begin() + start, partial.begin() + start + kAveragingWindow + 1);
  for (int level = 0; level < kAveragingWindow; ++level) {
    for (std::size_t i = 0; i + 1 < w.size() - level; ++i) w[i] = 0.5 * (w[i] + w[i + 1]);
  }
  return w.front();
}

EvalResult sum_at_minus_one(const Hyp2F1Params& p, double tol) {
  const double scale = std::fabs(p.a()) + std::fabs(p.b()) + std::fabs(p.c());
  long start = std::max(kAveragingStart, static_cast<long>(4.0 * scale));
  std::vector<double> partial;
  CompensatedSum sum(1.0);
  double term = 1.0;
  partial.push_back(1.0);
  auto extend_to = [&](long count) {
    while (static_cast<long>(partial.size()) < count) {
      const double dn = static_cast<double>(partial.size() - 1);
      term *= -(p.a() + dn) * (p.b() + dn) / ((p.c() + dn) * (dn + 1.0));
      sum += term;
      partial.push_back(sum.value());
    }
  };
  extend_to(start + kAveragingWindow + 1);
  double previous = averaged_tail(partial, start);
  while (2 * start + kAveragingWindow + 1 <= kMaxSeriesTerms) {
    start *= 2;
    extend_to(start + kAveragingWindow + 1);
    const double current = averaged_tail(partial, start);
    const double change = std::fabs(current - previous);
    if (change <= std::max(tol, 16.0 * kEps * std::fabs(current))) {
      return {current, change, Route::DirectSeries};
    }
    previous = current;
  }
  throw NonConvergenceError("eval_series: averaged partial sums at z = -1 did not settle");
}

// Generic connection to 1 - z for non-integer excess:
//   F = A F(a,b;1-s;w) + w^s B F(c-a,c-b;1+s;w).
EvalResult eval_near_unit_generic(const Hyp2F1Params& p, Argument arg, double tol) {
  const double s = p.excess();
  const double w = arg.one_minus_z;
  const double gc = gamma(p.c());
  const double coef_a = gc * gamma(s) * reciprocal_gamma(p.c() - p.a()) * reciprocal_gamma(p.c() - p.b());
  const double coef_b = gc * gamma(-s) * reciprocal_gamma(p.a()) * reciprocal_gamma(p.b());
  const double ws = std::pow(w, s);
  double value = 0.0;
  double err = 0.0;
  if (coef_a != 0.0) {
    const EvalResult first =
        eval_series(Hyp2F1Params(p.a(), p.b(), 1.0 - s), w, tol / (2.0 * std::fabs(coef_a)));
    value += coef_a * first.value;
    err += std::fabs(coef_a) * first.err_estimate;
  }
  if (coef_b != 0.0) {
    const double scale = std::fabs(coef_b) * ws;
    const EvalResult second = eval_series(Hyp2F1Params(p.c() - p.a(), p.c() - p.b(), 1.0 + s), w,
                                          scale > 0.0 ? tol / (2.0 * scale) : tol);
    value += coef_b * ws * second.value;
    err += scale * second.err_estimate;
  }
  return {value, err, Route::NearUnitConnection};
}

EvalResult eval_auto_impl(const Hyp2F1Params& p, Argument arg, double tol, int depth) {
  const double z = arg.z;
  if (p.terminating()) return sum_terminating(p, z);
  // The complement decides: z itself may round to 1 when 1 - z is tiny.
  if (!(arg.one_minus_z > 0.0)) {
    throw UnsupportedError("eval_auto: real z >= 1 is outside the supported region");
  }
  if (std::fabs(z) <= kDirectSeriesRadius) return eval_series(p, z, tol);
  if (z > 0.0) {
    if (p.zero_balanced()) return eval_near_unit_zero_balanced(p, arg, tol);
    const double s = p.excess();
    if (std::fabs(s - std::round(s)) >= kMinIntegerDistance) return eval_near_unit_generic(p, arg, tol);
    return eval_series(p, z, tol);
  }
  // One Pfaff hop maps z < -0.95 into (0.48, 1); a second is never needed.
  if (depth >= 1) throw NonConvergenceError("eval_auto: Pfaff recursion depth exceeded");
  const PfaffImage image = pfaff(p, arg);
  const EvalResult inner = eval_auto_impl(image.params, image.zeta, tol / image.prefactor, depth + 1);
  return {image.prefactor * inner.value, image.prefactor * inner.err_estimate, Route::PfaffContinuation};
}

}  // namespace

Hyp2F1Params::Hyp2F1Params(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw ParameterError("Hyp2F1Params: parameters must be finite");
  }
  if (is_nonpositive_integer(c)) throw ParameterError("Hyp2F1Params: c must not be 0, -1, -2, ...");
}

bool Hyp2F1Params::zero_balanced() const { return std::fabs(excess()) <= kZeroBalancedTol; }

bool Hyp2F1Params::terminating() const { return is_nonpositive_integer(a_) || is_nonpositive_integer(b_); }

std::string_view to_string(ConvergenceClass c) {
  switch (c) {
    case ConvergenceClass::Terminating: return "Terminating";
    case ConvergenceClass::AbsolutelyConvergent: return "AbsolutelyConvergent";
    case ConvergenceClass::ConditionallyConvergent: return "ConditionallyConvergent";
    case ConvergenceClass::Divergent: return "Divergent";
  }
  return "?";
}

std::string_view to_string(Route r) {
  switch (r) {
    case Route::DirectSeries: return "DirectSeries";
    case Route::PfaffContinuation: return "PfaffContinuation";
    case Route::NearUnitConnection: return "NearUnitConnection";
    case Route::ClosedForm: return "ClosedForm";
    case Route::AGM: return "AGM";
  }
  return "?";
}

ConvergenceClass classify(const Hyp2F1Params& params, double z) {
  if (params.terminating()) return ConvergenceClass::Terminating;
  const double r = std::fabs(z);
  if (r < 1.0) return ConvergenceClass::AbsolutelyConvergent;
  if (r > 1.0) return ConvergenceClass::Divergent;
  // Treat rounding-level excess (1 - 1/3 - 2/3) as exactly zero.
  const double s = params.zero_balanced() ? 0.0 : params.excess();
  if (s > 0.0) return ConvergenceClass::AbsolutelyConvergent;
  if (s > -1.0 && z != 1.0) return ConvergenceClass::ConditionallyConvergent;
  return ConvergenceClass::Divergent;
}

EvalResult eval_series(const Hyp2F1Params& params, double z, double tol) {
  switch (classify(params, z)) {
    case ConvergenceClass::Terminating:
      return sum_terminating(params, z);
    case ConvergenceClass::Divergent:
      throw DomainError("eval_series: series diverges at z = " + std::to_string(z));
    case ConvergenceClass::AbsolutelyConvergent:
    case ConvergenceClass::ConditionallyConvergent:
      break;
  }
  if (std::fabs(z) < 1.0) return sum_inside_disk(params, z, tol);
  if (z == -1.0) return sum_at_minus_one(params, tol);
  // z = 1 with s > 0: positive terms decaying like n^-(1+s).
  throw DomainError("eval_series: z = 1 is summed by gauss_theorem, not term by term");
}

EvalResult eval_near_unit_zero_balanced(const Hyp2F1Params& params, Argument arg, double tol) {
  if (!params.zero_balanced()) throw DomainError("eval_near_unit_zero_balanced: excess must be zero");
  if (params.terminating()) throw DomainError("eval_near_unit_zero_balanced: terminating parameters");
  const double w = arg.one_minus_z;
  if (!(w > 0.0 && w < 0.5)) throw DomainError("eval_near_unit_zero_balanced: need 0.5 < z < 1");
  const double a = params.a();
  const double b = params.b();
  // F(a,b;a+b;z) = Gamma(a+b)/(Gamma(a)Gamma(b))
  //   * sum_n (a)_n (b)_n / n!^2 [2 psi(n+1) - psi(a+n) - psi(b+n) - ln w] w^n
  const double prefactor = gamma(params.c()) * reciprocal_gamma(a) * reciprocal_gamma(b);
  const double log_w = std::log(w);
  double psi_n1 = -kEulerGamma;  // psi(n + 1)
  double psi_a = digamma(a);     // psi(a + n)
  double psi_b = digamma(b);     // psi(b + n)
  double coef = 1.0;             // (a)_n (b)_n / n!^2 w^n
  CompensatedSum sum;
  const double target = tol / std::max(std::fabs(prefactor), 1e-300);
  for (long n = 0; n < kMaxSeriesTerms; ++n) {
    const double term = coef * (2.0 * psi_n1 - psi_a - psi_b - log_w);
    sum += term;
    const double dn = static_cast<double>(n);
    coef *= (a + dn) * (b + dn) / ((dn + 1.0) * (dn + 1.0)) * w;
    psi_n1 += 1.0 / (dn + 1.0);
    psi_a += 1.0 / (a + dn);
    psi_b += 1.0 / (b + dn);
    const double next = coef * (2.0 * psi_n1 - psi_a - psi_b - log_w);
    // Coefficient ratios tend to w < 1/2 and the bracket grows only
    // logarithmically, so twice the next term bounds the tail.
    if (n > 0 && 2.0 * std::fabs(next) <= target) {
      return {prefactor * sum.value(), std::fabs(prefactor * next), Route::NearUnitConnection};
    }
  }
  throw NonConvergenceError("eval_near_unit_zero_balanced: term cap reached");
}

EvalResult eval_near_unit_zero_balanced(const Hyp2F1Params& params, double z, double tol) {
  return eval_near_unit_zero_balanced(params, Argument::from_value(z), tol);
}

PfaffImage pfaff(const Hyp2F1Params& params, Argument arg) {
  if (!(arg.z < 1.0) || !(arg.one_minus_z > 0.0)) throw DomainError("pfaff: requires z < 1");
  const double w = arg.one_minus_z;
  return {Hyp2F1Params(params.a(), params.c() - params.b(), params.c()),
          Argument::with_complement(-arg.z / w, 1.0 / w), std::pow(w, -params.a())};
}

PfaffImage pfaff(const Hyp2F1Params& params, double z) { return pfaff(params, Argument::from_value(z)); }

EvalResult eval_auto(const Hyp2F1Params& params, Argument arg, double tol) {
  return eval_auto_impl(params, arg, tol, 0);
}

EvalResult eval_auto(const Hyp2F1Params& params, double z, double tol) {
  return eval_auto_impl(params, Argument::from_value(z), tol, 0);
}

double gauss_theorem(const Hyp2F1Params& params) {
  const double s = params.excess();
  if (params.zero_balanced() || !(s > 0.0)) throw DomainError("gauss_theorem: requires c - a - b > 0");
  const double c = params.c();
  return gamma(c) * gamma(s) * reciprocal_gamma(c - params.a()) * reciprocal_gamma(c - params.b());
}

double kummer_theorem(double a, double b) {
  const double c = a - b + 1.0;
  if (is_nonpositive_integer(c)) throw PoleError("kummer_theorem: a - b + 1 is a pole of Gamma");
  return std::pow(2.0, -a) * std::sqrt(kPi) * gamma(c) * reciprocal_gamma(0.5 * (1.0 + a)) *
         reciprocal_gamma(1.0 + 0.5 * a - b);
}

}  // namespace rbbg
