#include "rbbg/elliptic.hpp"

#include <cmath>

#include "rbbg/errors.hpp"
#include "rbbg/special.hpp"

namespace rbbg {

Modulus Modulus::from_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("Modulus: requires 0 <= k < 1");
  return Modulus(k, std::sqrt((1.0 - k) * (1.0 + k)));
}

Modulus Modulus::from_parameter(double x) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("Modulus: requires 0 <= k^2 < 1");
  return Modulus(std::sqrt(x), std::sqrt(1.0 - x));
}

Modulus Modulus::from_complementary_parameter(double x_prime) {
  if (!(x_prime > 0.0 && x_prime <= 1.0)) throw DomainError("Modulus: requires 0 < k'^2 <= 1");
  return Modulus(std::sqrt(1.0 - x_prime), std::sqrt(x_prime));
}

double agm(double a0, double b0) {
  if (!(a0 > 0.0 && b0 > 0.0)) throw DomainError("agm: arguments must be positive");
  double a = a0;
  double b = b0;
  // Quadratic convergence; 64 rounds is far beyond any double input.
  for (int i = 0; i < 64; ++i) {
    const double next_a = 0.5 * (a + b);
    const double next_b = std::sqrt(a * b);
    if (next_a == a && next_b == b) break;
    a = next_a;
    b = next_b;
    if (std::fabs(a - b) <= 1e-16 * a) break;
  }
  return 0.5 * (a + b);
}

double ellipK(const Modulus& k) {
  if (!(k.k_prime() > 0.0)) throw DomainError("ellipK: diverges as k -> 1");
  return kPi / (2.0 * agm(1.0, k.k_prime()));
}

double period_ratio(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("period_ratio: requires 0 < x < 1");
  return agm(1.0, std::sqrt(1.0 - x)) / agm(1.0, std::sqrt(x));
}

SingularValue singular_modulus(int n, double tol) {
  if (n < 1) throw DomainError("singular_modulus: n must be positive");
  const double target = std::sqrt(static_cast<double>(n));
  // The ratio decreases strictly from +inf at x -> 0 to 0 at x -> 1.
  double lo = 0.0;
  double hi = 1.0;
  double best = 0.5;
  double best_residual = std::fabs(period_ratio(best) - target);
  for (int iter = 0; iter < 2000 && best_residual > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = period_ratio(mid) - target;
    if (std::fabs(f) < best_residual) {
      best = mid;
      best_residual = std::fabs(f);
    }
    if (f > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {n, best, best_residual};
}

double x9_closed_form() {
  // sqrt 2 - 3^(1/4) = 1 / ((2 + sqrt 3)(sqrt 2 + 3^(1/4))), free of cancellation.
  const double s3 = std::sqrt(3.0);
  const double r = 1.0 / ((2.0 + s3) * (std::sqrt(2.0) + std::sqrt(s3)) * (1.0 + s3));
  return r * r;
}

}  // namespace rbbg
