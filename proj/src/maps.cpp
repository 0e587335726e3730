#include "rbbg/maps.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rbbg/errors.hpp"

namespace rbbg {
namespace {

double cube(double x) { return x * x * x; }

void require_above_minus_half(double p, const char* what) {
  if (p == -0.5) throw PoleError(std::string(what) + ": pole at p = -1/2");
  if (!(p > -0.5)) throw DomainError(std::string(what) + ": requires p > -1/2");
}

void require_open_unit(double p, const char* what) {
  if (!(p > -1.0 && p < 1.0)) throw DomainError(std::string(what) + ": requires -1 < p < 1");
}

EscapeConstants compute_escape_points() {
  const double s3 = std::sqrt(3.0);
  EscapeConstants e{
      0.5 * (-1.0 - s3 + std::sqrt(2.0 * s3)),
      0.5 * (std::sqrt(3.0 + 2.0 * s3) - 1.0),
      0.5 * (std::sqrt(6.0 * s3 - 9.0) - 1.0),
  };
  // Transcription guard.
  if (std::fabs(alpha(e.p_star) + 1.0) > 1e-13 || std::fabs(alpha_ell(e.p_star_ell) + 1.0) > 1e-13) {
    throw std::logic_error("escape_points: radicals do not solve alpha = -1");
  }
  if (!(-0.5 < e.p_star && e.p_star < 0.0 && 0.0 < e.p_nine && e.p_nine < e.p_star_ell && e.p_star_ell < 1.0)) {
    throw std::logic_error("escape_points: ordering violated");
  }
  return e;
}

}  // namespace

double alpha(double p) {
  if (p == -0.5) throw PoleError("alpha: pole at p = -1/2");
  return cube(p) * (2.0 + p) / (1.0 + 2.0 * p);
}

double one_minus_alpha(double p) {
  if (p == -0.5) throw PoleError("one_minus_alpha: pole at p = -1/2");
  return (1.0 - p) * cube(1.0 + p) / (1.0 + 2.0 * p);
}

double beta(double p) {
  const double q = 1.0 + p + p * p;
  return 27.0 * p * p * (1.0 + p) * (1.0 + p) / (4.0 * cube(q));
}

double one_minus_beta(double p) {
  const double q = 1.0 + p + p * p;
  const double f = (1.0 - p) * (2.0 + p) * (1.0 + 2.0 * p);
  return f * f / (4.0 * cube(q));
}

double gamma_coef(double p) {
  require_above_minus_half(p, "gamma_coef");
  return (1.0 + p + p * p) / std::sqrt(1.0 + 2.0 * p);
}

double alpha_ell(double p) {
  require_open_unit(p, "alpha_ell");
  return -cube(p) * (2.0 + p) / ((1.0 - p) * cube(1.0 + p));
}

double one_minus_alpha_ell(double p) {
  require_open_unit(p, "one_minus_alpha_ell");
  return (1.0 + 2.0 * p) / ((1.0 - p) * cube(1.0 + p));
}

double gamma_ell(double p) {
  require_open_unit(p, "gamma_ell");
  return (1.0 + p + p * p) / ((1.0 + p) * std::sqrt((1.0 - p) * (1.0 + p)));
}

double beta_tilde(double p) {
  const double q = 1.0 + 4.0 * p + p * p;
  if (q == 0.0) throw PoleError("beta_tilde: pole at a root of 1 + 4p + p^2");
  const double r = (1.0 + p) * (1.0 + p);
  return 27.0 * p * r * r / (2.0 * cube(q));
}

double one_minus_beta_tilde(double p) {
  const double q = 1.0 + 4.0 * p + p * p;
  if (q == 0.0) throw PoleError("one_minus_beta_tilde: pole at a root of 1 + 4p + p^2");
  const double r = (1.0 - p) * (1.0 - p);
  return r * r * (2.0 + p) * (1.0 + 2.0 * p) / (2.0 * cube(q));
}

double gamma_tilde(double p) {
  require_above_minus_half(p, "gamma_tilde");
  return (1.0 + 4.0 * p + p * p) / std::sqrt(1.0 + 2.0 * p);
}

double dalpha_dp(double p) {
  if (p == -0.5) throw PoleError("dalpha_dp: pole at p = -1/2");
  const double r = p * (1.0 + p) / (1.0 + 2.0 * p);
  return 6.0 * r * r;
}

double dbeta_dp(double p) {
  const double q = 1.0 + p + p * p;
  return 27.0 * p * (1.0 - p * p) * (1.0 + 2.0 * p) * (2.0 + p) / (4.0 * q * q * q * q);
}

const EscapeConstants& escape_points() {
  static const EscapeConstants constants = compute_escape_points();
  return constants;
}

CubicArgument cubic_arg_map(double x) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("cubic_arg_map: requires 0 <= x < 1");
  const double multiplier = 1.0 + 2.0 * x;
  const double complement = cube((1.0 - x) / multiplier);
  return {1.0 - complement, complement, multiplier};
}

}  // namespace rbbg
