#pragma once

// Gauss hypergeometric function 2F1(a, b; c; z) on the real axis z < 1:
// convergence classification, direct summation, the logarithmic connection
// at z -> 1 for zero-balanced parameters, the Pfaff continuation for large
// negative z, and the Gauss and Kummer closed-form values.

#include <string_view>

namespace rbbg {

/// Parameter triple of 2F1. The parametric excess s = c - a - b is always
/// recomputed from a, b, c.
class Hyp2F1Params {
 public:
  /// Throws ParameterError when c is 0, -1, -2, ...
  Hyp2F1Params(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double excess() const { return c_ - a_ - b_; }

  /// Excess zero within kZeroBalancedTol.
  bool zero_balanced() const;
  /// a or b is 0, -1, -2, ...
  bool terminating() const;

  friend bool operator==(const Hyp2F1Params&, const Hyp2F1Params&) = default;

 private:
  double a_;
  double b_;
  double c_;
};

inline constexpr double kZeroBalancedTol = 1e-14;
inline constexpr double kDirectSeriesRadius = 0.95;
inline constexpr long kMaxSeriesTerms = 1'000'000;
inline constexpr double kDefaultTol = 1e-16;

/// Real argument together with its complement 1 - z.
///
/// Near z = 1 the complement carries the information; building it from an
/// exact algebraic expression instead of 1 - z avoids cancellation.
struct Argument {
  double z;
  double one_minus_z;

  static Argument from_value(double z) { return {z, 1.0 - z}; }
  static Argument from_complement(double w) { return {1.0 - w, w}; }
  static Argument with_complement(double z, double w) { return {z, w}; }
};

enum class ConvergenceClass { Terminating, AbsolutelyConvergent, ConditionallyConvergent, Divergent };
enum class Route { DirectSeries, PfaffContinuation, NearUnitConnection, ClosedForm, AGM };

std::string_view to_string(ConvergenceClass c);
std::string_view to_string(Route r);

struct EvalResult {
  double value;
  double err_estimate;
  Route route;
};

/// Verdict of the classical convergence rules for the series at z.
ConvergenceClass classify(const Hyp2F1Params& params, double z);

/// Partial sums of the hypergeometric series.
///
/// Inside |z| < 1 terms are accumulated with compensation until the tail
/// bound drops below tol; err_estimate is the first omitted term. At
/// z = -1 with -1 < s (the only real boundary point reachable) the partial
/// sums are smoothed by iterated pairwise averaging of a tail window.
/// Terminating series are summed exactly for any z.
/// Throws NonConvergenceError when kMaxSeriesTerms is exceeded and
/// DomainError when the series diverges at z.
EvalResult eval_series(const Hyp2F1Params& params, double z, double tol = kDefaultTol);

/// Zero-balanced (s = 0) logarithmic expansion in powers of 1 - z,
/// valid for 0.5 < z < 1. Throws DomainError otherwise.
EvalResult eval_near_unit_zero_balanced(const Hyp2F1Params& params, Argument arg,
                                        double tol = kDefaultTol);
EvalResult eval_near_unit_zero_balanced(const Hyp2F1Params& params, double z,
                                        double tol = kDefaultTol);

/// Result of the linear Pfaff transformation
///   2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1)).
struct PfaffImage {
  Hyp2F1Params params;
  Argument zeta;
  double prefactor;
};

/// Throws DomainError for z >= 1.
PfaffImage pfaff(const Hyp2F1Params& params, Argument arg);
PfaffImage pfaff(const Hyp2F1Params& params, double z);

/// Dispatching evaluator for real z < 1:
///   |z| <= 0.95           direct series
///   0.95 < z < 1          near-unit connection (zero-balanced or generic
///                         non-integer excess), else direct series
///   z < -0.95             one Pfaff hop, then the above
/// Terminating series are summed directly for any z. Throws
/// UnsupportedError for non-terminating z >= 1.
EvalResult eval_auto(const Hyp2F1Params& params, Argument arg, double tol = kDefaultTol);
EvalResult eval_auto(const Hyp2F1Params& params, double z, double tol = kDefaultTol);

/// 2F1(a,b;c;1) = Gamma(c) Gamma(s) / (Gamma(c-a) Gamma(c-b)), s > 0.
double gauss_theorem(const Hyp2F1Params& params);

/// 2F1(a, b; a-b+1; -1) = 2^-a sqrt(pi) Gamma(a-b+1) / (Gamma((1+a)/2) Gamma(1+a/2-b)).
double kummer_theorem(double a, double b);

}  // namespace rbbg
