#pragma once

// Complete elliptic integral of the first kind through the AGM, and the
// singular moduli k_n defined by K(k_n')/K(k_n) = sqrt(n).

namespace rbbg {

/// Modulus k in [0, 1) and its complement k' = sqrt(1 - k^2).
///
/// Built from the parameter x = k^2 or from the complementary parameter
/// 1 - x, so that k' stays accurate when k is close to 1.
class Modulus {
 public:
  static Modulus from_k(double k);
  static Modulus from_parameter(double x);
  static Modulus from_complementary_parameter(double x_prime);

  double k() const { return k_; }
  double k_prime() const { return k_prime_; }
  /// The modulus with k and k' exchanged.
  Modulus complementary() const { return Modulus(k_prime_, k_); }

 private:
  Modulus(double k, double k_prime) : k_(k), k_prime_(k_prime) {}
  double k_;
  double k_prime_;
};

/// Arithmetic-geometric mean. Throws DomainError unless a0, b0 > 0.
double agm(double a0, double b0);

/// K(k) = pi / (2 agm(1, k')). Throws DomainError when k' = 0.
double ellipK(const Modulus& k);

/// K(k')/K(k) for k^2 = x, evaluated as agm(1, k') / agm(1, k).
double period_ratio(double x);

struct SingularValue {
  int n;
  double x_n;       // k_n^2
  double residual;  // |K(k')/K(k) - sqrt(n)| at x_n
};

/// Bisection for x_n on (0, 1). Stops when the residual is below tol or
/// the bracket can no longer shrink in double precision; in the latter
/// case the returned residual reports what was reached.
/// Throws DomainError for n < 1.
SingularValue singular_modulus(int n, double tol = 1e-14);

/// x_9 = ((sqrt 2 - 3^(1/4)) / (1 + sqrt 3))^2.
double x9_closed_form();

}  // namespace rbbg
