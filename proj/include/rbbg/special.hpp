#pragma once

// Scalar special-function kernels: Gamma, log-Gamma, digamma, Pochhammer.
// Real arguments only. All functions are pure.

namespace rbbg {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// True when x is 0, -1, -2, ... (exactly).
bool is_nonpositive_integer(double x) noexcept;

/// Gamma function. Lanczos approximation for x >= 1/2 and the reflection
/// formula below. Relative error about 1e-15 for |x| <= 50.
/// Throws PoleError at non-positive integers.
double gamma(double x);

/// 1/Gamma(x); entire, so it returns exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x);

/// ln Gamma(x) for x > 0. Throws DomainError for x <= 0.
double log_gamma(double x);

/// ln|Gamma(x)| together with the sign of Gamma(x); defined off the poles.
struct SignedLogGamma {
  double log_abs;
  int sign;
};
SignedLogGamma log_abs_gamma(double x);

/// Digamma psi(x). Throws PoleError at non-positive integers.
double digamma(double x);

/// Pochhammer symbol (base)_order.
///
/// A non-negative integer order uses the rising product
/// base (base+1) ... (base+order-1), which is defined for every base.
/// Any other order uses Gamma(base+order)/Gamma(base), evaluated in log
/// space with sign tracking so that large arguments do not overflow.
/// Throws PoleError when the ratio definition meets a pole.
double pochhammer(double base, double order);

}  // namespace rbbg
