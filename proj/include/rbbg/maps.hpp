#pragma once

// Algebraic maps of the cubic/quadratic hypergeometric transformation in
// the parameter p, their derivatives, the companion maps, the escape
// points and the cubic argument map. Each map is evaluated from its
// factored form; complements 1 - f(p) are provided wherever f(p) -> 1.

namespace rbbg {

/// alpha(p) = p^3 (2+p) / (1+2p). Pole at p = -1/2.
double alpha(double p);
/// 1 - alpha(p) = (1-p^2)(1+p)^2 / (1+2p).
double one_minus_alpha(double p);

/// beta(p) = 27 p^2 (1+p)^2 / (4 (1+p+p^2)^3).
double beta(double p);
/// 1 - beta(p) = (1-p)^2 (2+p)^2 (1+2p)^2 / (4 (1+p+p^2)^3).
double one_minus_beta(double p);

/// gamma(p) = (1+p+p^2) / sqrt(1+2p), p > -1/2.
double gamma_coef(double p);

/// alpha_l(p) = -p^3 (2+p) / ((1-p^2)(1+p)^2) = alpha/(alpha-1), -1 < p < 1.
double alpha_ell(double p);
/// 1 - alpha_l(p) = (1+2p) / ((1-p^2)(1+p)^2).
double one_minus_alpha_ell(double p);
/// gamma_l(p) = (1+p+p^2) / ((1+p) sqrt(1-p^2)), -1 < p < 1.
double gamma_ell(double p);

/// Companion maps. beta~(p) = 27 p (1+p)^4 / (2 (1+4p+p^2)^3).
double beta_tilde(double p);
/// 1 - beta~(p) = (1-p)^4 (2+p)(1+2p) / (2 (1+4p+p^2)^3).
double one_minus_beta_tilde(double p);
/// gamma~(p) = (1+4p+p^2) / sqrt(1+2p), p > -1/2.
double gamma_tilde(double p);

double dalpha_dp(double p);
double dbeta_dp(double p);

struct EscapeConstants {
  double p_star;      // alpha(p_star) = -1
  double p_star_ell;  // alpha_l(p_star_ell) = -1
  double p_nine;      // alpha(p_nine) = x_9, the n = 9 singular value
};

/// Closed-form radicals, computed once and checked against the defining
/// equations on first use.
const EscapeConstants& escape_points();

struct CubicArgument {
  double argument;     // 1 - ((1-x)/(1+2x))^3
  double complement;   // ((1-x)/(1+2x))^3
  double multiplier;   // 1 + 2x
};

/// Argument map of the cubic transformation
///   F(1/3,2/3;1; 1 - ((1-x)/(1+2x))^3) = (1+2x) F(1/3,2/3;1; x^3), 0 <= x < 1.
CubicArgument cubic_arg_map(double x);

}  // namespace rbbg
