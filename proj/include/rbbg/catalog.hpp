#pragma once

// Registry of the verifiable identities, closed-form evaluations and ratio
// laws. Every entry pairs two independent evaluation recipes: one goes
// through the 2F1 engine, the other is algebraic (another 2F1 instance or
// an exact Gamma/radical expression).
//
// Public ids:
//   identities    RBBG COR COMPANION CUBIC BRR1
//   closed forms  BR2 BR3 RS3 B33 R33 COMM BF1 BF1A FF3 LAS
//   ratio laws    R1 R2 R3

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbbg/hyp2f1.hpp"

namespace rbbg {

struct Interval {
  double lo;
  double hi;
  bool lo_open;
  bool hi_open;

  bool contains(double x) const;
};

/// Exact arguments shared by the closed forms and the ratio laws.
///   z0 = (sqrt3+2)/(3 sqrt3)     z1 = (sqrt3-2)/(3 sqrt3)
///   y0 = z0/(z0-1) = -((sqrt3+1)/2)^3
///   y1 = z1/(z1-1) =  ((sqrt3-1)/2)^3
struct CatalogConstants {
  double z0;
  double z1;
  double y0;
  double y1;
};
const CatalogConstants& catalog_constants();

struct IdentitySides {
  double lhs;
  double rhs;
  Route lhs_route;
  Route rhs_route;

  double abs_residual() const;
  /// |lhs - rhs| / |lhs|, or the absolute residual when lhs = 0.
  double rel_residual() const;
};

enum class RbbgBranch {
  Direct,  // gamma(p) F(1/2,1/2;1; alpha(p)),        p* <= p < 1
  Pfaff,   // gamma_l(p) F(1/2,1/2;1; alpha_l(p)),   -1/2 < p <= p*_l
};

/// F(1/3,2/3;1; beta(p)) against the right-hand side of the requested
/// branch. Throws DomainError when p is outside that branch's range.
IdentitySides rbbg_sides(double p, RbbgBranch branch, double tol = kDefaultTol);
/// Direct branch for p >= p*, Pfaff branch below.
IdentitySides rbbg_sides(double p, double tol = kDefaultTol);
double residual_rbbg(double p, double tol = kDefaultTol);

/// Direct branch against Pfaff branch on [p*, p*_l].
IdentitySides branch_agreement_sides(double p, double tol = kDefaultTol);

/// sqrt3 F(1/3,2/3;1; 1-beta(p)) vs gamma(p) F(1/2,1/2;1; 1-alpha(p)), 0 < p < 1.
IdentitySides corollary_sides(double p, double tol = kDefaultTol);
double residual_corollary(double p, double tol = kDefaultTol);

/// F(1/3,2/3;1; beta~(p)) vs gamma~(p) F(1/2,1/2;1; alpha(p)), 0 <= p < 1.
IdentitySides companion_sides(double p, double tol = kDefaultTol);
double residual_companion(double p, double tol = kDefaultTol);

/// F(1/3,2/3;1; 1-((1-x)/(1+2x))^3) vs (1+2x) F(1/3,2/3;1; x^3), 0 <= x <= 0.95.
IdentitySides cubic_sides(double x, double tol = kDefaultTol);
double residual_cubic(double x, double tol = kDefaultTol);

/// C1(t) = (2/3)_t (7/6)_t / ((3/4)_t (13/12)_t).
double C1(double t);

struct IdentityEntry {
  std::string id;
  std::string description;
  std::string parameter;  // name of the free variable: "p" or "x"
  Interval domain;
  double default_tol;
  std::function<IdentitySides(double, double)> evaluate;  // (parameter, engine tol)
};

struct ClosedFormEntry {
  std::string id;
  std::string description;
  bool parametric;
  Interval a_domain;  // sweep range for parametric families
  std::function<Hyp2F1Params(double)> params;
  Argument argument;
  std::function<double(double)> closed_form;
  std::optional<Route> required_route;
};

enum class RatioFamily { R1, R2, R3 };

struct RatioEntry {
  std::string id;
  std::string description;
  RatioFamily family;
  Interval a_domain;
};

enum class EntryKind { Identity, ClosedForm, Ratio };

/// All ids in registration order.
const std::vector<std::string>& catalog_ids();
/// Throws UnknownIdError.
EntryKind kind_of(std::string_view id);
const IdentityEntry& identity_entry(std::string_view id);
const ClosedFormEntry& closed_form_entry(std::string_view id);
const RatioEntry& ratio_entry(std::string_view id);

/// Exact right-hand side of a closed-form entry. `a` must be given for the
/// parametric families (BF1 BF1A FF3 LAS) and omitted otherwise.
double closed_form_value(std::string_view id, std::optional<double> a = std::nullopt);

struct ClosedFormCheck {
  double closed_form;
  EvalResult engine;
  bool route_ok;  // engine.route matches required_route, if any

  double abs_residual() const;
  double rel_residual() const;
};
ClosedFormCheck check_closed_form(std::string_view id, std::optional<double> a = std::nullopt,
                                  double tol = kDefaultTol);

RatioFamily ratio_family(std::string_view id);
std::string_view to_string(RatioFamily family);

/// Closed cosine law of the ratio family.
double ratio_law(RatioFamily family, double a);
/// R1 in its trigonometric form 4^a cos(pi/12)^(2a-1) cos(pi/2 (a+1/6)).
double ratio_law_trig(double a);

struct RatioParts {
  EvalResult numerator;
  EvalResult denominator;
  double ratio() const { return numerator.value / denominator.value; }
};
RatioParts ratio_parts(RatioFamily family, double a, double tol = kDefaultTol);
double ratio_numeric(RatioFamily family, double a, double tol = kDefaultTol);

}  // namespace rbbg
