#include "rbbg/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rbbg/elliptic.hpp"
#include "rbbg/errors.hpp"
#include "rbbg/maps.hpp"
#include "rbbg/special.hpp"

namespace rbbg {
namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

const Hyp2F1Params kCubicParams(1.0 / 3.0, 2.0 / 3.0, 1.0);
const Hyp2F1Params kQuadraticParams(0.5, 0.5, 1.0);

double gamma_quarter_squared() {
  static const double g = [] {
    const double v = gamma(0.25);
    return v * v;
  }();
  return g;
}

double cos_half_pi(double x) { return std::cos(0.5 * kPi * x); }

// Shared prefactor of R1 and R2: 2 ((sqrt3+1)/sqrt2)^(2a-1).
double ratio_prefactor(double a) { return 2.0 * std::pow((kSqrt3 + 1.0) / kSqrt2, 2.0 * a - 1.0); }

Argument exact(double z) { return Argument::from_value(z); }

IdentitySides make_sides(double lhs, Route lhs_route, double rhs, Route rhs_route) {
  return {lhs, rhs, lhs_route, rhs_route};
}

EvalResult cubic_lhs(double beta_value, double beta_complement, double tol) {
  return eval_auto(kCubicParams, Argument::with_complement(beta_value, beta_complement), tol);
}

// --- closed forms ----------------------------------------------------------

std::vector<ClosedFormEntry> build_closed_forms() {
  const CatalogConstants& k = catalog_constants();
  const double g2 = gamma_quarter_squared();
  const double pi32 = std::pow(kPi, 1.5);
  const double two_pi32 = std::pow(2.0 * kPi, 1.5);
  const Interval a_range{-0.9, 0.9, false, false};
  const Interval none{0.0, 0.0, false, false};

  auto fixed = [](Hyp2F1Params p) { return [p](double) { return p; }; };
  auto bf_params = [](double a) { return Hyp2F1Params(a, 1.0 - 2.0 * a, 4.0 / 3.0 - a); };
  auto ff_params = [](double a) { return Hyp2F1Params(a, a + 1.0 / 3.0, 4.0 / 3.0 - a); };

  std::vector<ClosedFormEntry> entries;
  entries.push_back({"BR2", "F(1/2,1/2;1; x9) = (1+sqrt3) Gamma(1/4)^2 / (2 sqrt3 pi)^(3/2)", false, none,
                     fixed(kQuadraticParams), exact(x9_closed_form()),
                     [=](double) { return (1.0 + kSqrt3) * g2 / std::pow(2.0 * kSqrt3 * kPi, 1.5); },
                     std::nullopt});
  entries.push_back({"BR3", "F(1/3,2/3;1; y1) = (2 sqrt3)^(-1/4) sqrt(sqrt3+1) Gamma(1/4)^2 / (2pi)^(3/2)", false,
                     none, fixed(kCubicParams), exact(k.y1),
                     [=](double) { return std::pow(2.0 * kSqrt3, -0.25) * std::sqrt(kSqrt3 + 1.0) * g2 / two_pi32; },
                     std::nullopt});
  entries.push_back({"RS3", "F(1/3,2/3;1; y0) = (2 sqrt3)^(-1/4) sqrt(sqrt3-1) Gamma(1/4)^2 / (2 pi^(3/2))", false,
                     none, fixed(kCubicParams), exact(k.y0),
                     [=](double) { return std::pow(2.0 * kSqrt3, -0.25) * std::sqrt(kSqrt3 - 1.0) * g2 / (2.0 * pi32); },
                     Route::PfaffContinuation});
  entries.push_back({"B33", "F(1/3,1/3;1; z1) = 3^(3/8) (sqrt3+1)^(1/6) Gamma(1/4)^2 / (2^(1/12) 4 pi^(3/2))", false,
                     none, fixed(Hyp2F1Params(1.0 / 3.0, 1.0 / 3.0, 1.0)), exact(k.z1),
                     [=](double) {
                       return std::pow(3.0, 0.375) * std::pow(kSqrt3 + 1.0, 1.0 / 6.0) * g2 /
                              (std::pow(2.0, 1.0 / 12.0) * 4.0 * pi32);
                     },
                     std::nullopt});
  entries.push_back({"R33", "F(1/3,1/3;1; z0) = 3^(3/8) (sqrt3-1)^(1/6) Gamma(1/4)^2 / (2^(1/12) (2pi)^(3/2))", false,
                     none, fixed(Hyp2F1Params(1.0 / 3.0, 1.0 / 3.0, 1.0)), exact(k.z0),
                     [=](double) {
                       return std::pow(3.0, 0.375) * std::pow(kSqrt3 - 1.0, 1.0 / 6.0) * g2 /
                              (std::pow(2.0, 1.0 / 12.0) * two_pi32);
                     },
                     std::nullopt});
  entries.push_back({"COMM", "F(1/3,2/3;1; 1-y1) = (3 sqrt3/2)^(1/4) sqrt(sqrt3+1) Gamma(1/4)^2 / (2pi)^(3/2)", false,
                     none, fixed(kCubicParams), Argument::from_complement(k.y1),
                     [=](double) {
                       return std::pow(1.5 * kSqrt3, 0.25) * std::sqrt(kSqrt3 + 1.0) * g2 / two_pi32;
                     },
                     std::nullopt});
  entries.push_back({"BF1", "F(a,1-2a;4/3-a; z0) = (-27 z1/16)^(-a/2) cos(pi/2 (a+1/6)) / cos(pi/12) C1(-a/2)", true,
                     a_range, bf_params, exact(k.z0),
                     [=](double a) {
                       return std::pow(-27.0 * k.z1 / 16.0, -0.5 * a) * cos_half_pi(a + 1.0 / 6.0) /
                              std::cos(kPi / 12.0) * C1(-0.5 * a);
                     },
                     std::nullopt});
  entries.push_back({"BF1A", "F(a,1-2a;4/3-a; z1) = (27 z0/16)^(-a/2) C1(-a/2)", true, a_range, bf_params,
                     exact(k.z1), [=](double a) { return std::pow(27.0 * k.z0 / 16.0, -0.5 * a) * C1(-0.5 * a); },
                     std::nullopt});
  entries.push_back({"FF3", "F(a,a+1/3;4/3-a; y1) = (81 sqrt3/128)^(-a/2) C1(-a/2)", true, a_range, ff_params,
                     exact(k.y1), [=](double a) { return std::pow(81.0 * kSqrt3 / 128.0, -0.5 * a) * C1(-0.5 * a); },
                     std::nullopt});
  entries.push_back({"LAS",
                     "F(a,a+1/3;4/3-a; y0) = (81 sqrt3/128)^(-a/2) sqrt2 (sqrt3-1) cos(pi/2 (a+1/6)) C1(-a/2)", true,
                     a_range, ff_params, exact(k.y0),
                     [=](double a) {
                       return std::pow(81.0 * kSqrt3 / 128.0, -0.5 * a) * kSqrt2 * (kSqrt3 - 1.0) *
                              cos_half_pi(a + 1.0 / 6.0) * C1(-0.5 * a);
                     },
                     Route::PfaffContinuation});
  return entries;
}

// --- identities ------------------------------------------------------------

std::vector<IdentityEntry> build_identities() {
  const EscapeConstants& e = escape_points();
  std::vector<IdentityEntry> entries;
  entries.push_back({"RBBG", "F(1/3,2/3;1; beta(p)) = gamma(p) F(1/2,1/2;1; alpha(p)), continued below p*", "p",
                     {-0.5, 1.0, true, true}, 1e-9,
                     [](double p, double tol) { return rbbg_sides(p, tol); }});
  entries.push_back({"COR", "sqrt3 F(1/3,2/3;1; 1-beta(p)) = gamma(p) F(1/2,1/2;1; 1-alpha(p))", "p",
                     {0.0, 1.0, true, true}, 1e-9, [](double p, double tol) { return corollary_sides(p, tol); }});
  entries.push_back({"COMPANION", "F(1/3,2/3;1; beta~(p)) = gamma~(p) F(1/2,1/2;1; alpha(p))", "p",
                     {0.0, 1.0, false, true}, 1e-9, [](double p, double tol) { return companion_sides(p, tol); }});
  entries.push_back({"CUBIC", "F(1/3,2/3;1; 1-((1-x)/(1+2x))^3) = (1+2x) F(1/3,2/3;1; x^3)", "x",
                     {0.0, 0.95, false, false}, 1e-9, [](double x, double tol) { return cubic_sides(x, tol); }});
  entries.push_back({"BRR1", "gamma(p) F(1/2,1/2;1; alpha(p)) = gamma_l(p) F(1/2,1/2;1; alpha_l(p)) on [p*, p*_l]",
                     "p", {e.p_star, e.p_star_ell, false, false}, 1e-10,
                     [](double p, double tol) { return branch_agreement_sides(p, tol); }});
  return entries;
}

std::vector<RatioEntry> build_ratios() {
  const Interval range{-1.0, 1.0, false, false};
  return {
      {"R1", "F(a,1-2a;4/3-a; z0) / F(a,1-2a;4/3-a; z1) = 2 ((sqrt3+1)/sqrt2)^(2a-1) cos(pi/2 (a+1/6))",
       RatioFamily::R1, range},
      {"R2", "F(a,2-2a;5/3-a; z0) / F(a,2-2a;5/3-a; z1) = 2 ((sqrt3+1)/sqrt2)^(2a-1) cos(pi/2 (a-1/6))",
       RatioFamily::R2, range},
      {"R3", "F(a,a+1/3;4/3-a; y0) / F(a,a+1/3;4/3-a; y1) = sqrt2 (sqrt3-1) cos(pi/2 (a+1/6))", RatioFamily::R3,
       range},
  };
}

struct Registry {
  std::vector<IdentityEntry> identities = build_identities();
  std::vector<ClosedFormEntry> closed_forms = build_closed_forms();
  std::vector<RatioEntry> ratios = build_ratios();
  std::vector<std::string> ids;
  std::map<std::string, EntryKind, std::less<>> kinds;

  Registry() {
    for (const auto& e : identities) add(e.id, EntryKind::Identity);
    for (const auto& e : closed_forms) add(e.id, EntryKind::ClosedForm);
    for (const auto& e : ratios) add(e.id, EntryKind::Ratio);
  }

  void add(const std::string& id, EntryKind kind) {
    ids.push_back(id);
    kinds.emplace(id, kind);
  }
};

const Registry& registry() {
  static const Registry r;
  return r;
}

template <typename Entry>
const Entry& find_entry(const std::vector<Entry>& entries, std::string_view id, const char* what) {
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const Entry& e) { return e.id == id; });
  if (it == entries.end()) throw UnknownIdError(std::string(what) + ": unknown id '" + std::string(id) + "'");
  return *it;
}

}  // namespace

bool Interval::contains(double x) const {
  const bool above = lo_open ? x > lo : x >= lo;
  const bool below = hi_open ? x < hi : x <= hi;
  return above && below;
}

const CatalogConstants& catalog_constants() {
  static const CatalogConstants constants = [] {
    const double s3 = std::sqrt(3.0);
    const double up = 0.5 * (s3 + 1.0);
    const double down = 0.5 * (s3 - 1.0);
    return CatalogConstants{(s3 + 2.0) / (3.0 * s3), (s3 - 2.0) / (3.0 * s3), -up * up * up, down * down * down};
  }();
  return constants;
}

double IdentitySides::abs_residual() const { return std::fabs(lhs - rhs); }

double IdentitySides::rel_residual() const {
  const double abs = abs_residual();
  return lhs == 0.0 ? abs : abs / std::fabs(lhs);
}

IdentitySides rbbg_sides(double p, RbbgBranch branch, double tol) {
  const EscapeConstants& e = escape_points();
  if (!(p > -0.5 && p < 1.0)) throw DomainError("RBBG: requires -1/2 < p < 1");
  const EvalResult lhs = cubic_lhs(beta(p), one_minus_beta(p), tol);
  if (branch == RbbgBranch::Direct) {
    if (p < e.p_star) throw DomainError("RBBG: direct branch requires p >= p*");
    const EvalResult rhs =
        eval_auto(kQuadraticParams, Argument::with_complement(alpha(p), one_minus_alpha(p)), tol);
    return make_sides(lhs.value, lhs.route, gamma_coef(p) * rhs.value, rhs.route);
  }
  if (p > e.p_star_ell) throw DomainError("RBBG: Pfaff branch requires p <= p*_l");
  const EvalResult rhs =
      eval_auto(kQuadraticParams, Argument::with_complement(alpha_ell(p), one_minus_alpha_ell(p)), tol);
  return make_sides(lhs.value, lhs.route, gamma_ell(p) * rhs.value, Route::PfaffContinuation);
}

IdentitySides rbbg_sides(double p, double tol) {
  return rbbg_sides(p, p >= escape_points().p_star ? RbbgBranch::Direct : RbbgBranch::Pfaff, tol);
}

double residual_rbbg(double p, double tol) { return rbbg_sides(p, tol).abs_residual(); }

IdentitySides branch_agreement_sides(double p, double tol) {
  const EscapeConstants& e = escape_points();
  if (!(p >= e.p_star && p <= e.p_star_ell)) throw DomainError("BRR1: requires p* <= p <= p*_l");
  const IdentitySides direct = rbbg_sides(p, RbbgBranch::Direct, tol);
  const IdentitySides continued = rbbg_sides(p, RbbgBranch::Pfaff, tol);
  return make_sides(direct.rhs, direct.rhs_route, continued.rhs, continued.rhs_route);
}

IdentitySides corollary_sides(double p, double tol) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("COR: requires 0 < p < 1");
  const EvalResult lhs = cubic_lhs(one_minus_beta(p), beta(p), tol);
  const EvalResult rhs = eval_auto(kQuadraticParams, Argument::with_complement(one_minus_alpha(p), alpha(p)), tol);
  return make_sides(std::sqrt(3.0) * lhs.value, lhs.route, gamma_coef(p) * rhs.value, rhs.route);
}

double residual_corollary(double p, double tol) { return corollary_sides(p, tol).abs_residual(); }

IdentitySides companion_sides(double p, double tol) {
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("COMPANION: requires 0 <= p < 1");
  const EvalResult lhs = cubic_lhs(beta_tilde(p), one_minus_beta_tilde(p), tol);
  const EvalResult rhs = eval_auto(kQuadraticParams, Argument::with_complement(alpha(p), one_minus_alpha(p)), tol);
  return make_sides(lhs.value, lhs.route, gamma_tilde(p) * rhs.value, rhs.route);
}

double residual_companion(double p, double tol) { return companion_sides(p, tol).abs_residual(); }

IdentitySides cubic_sides(double x, double tol) {
  if (!(x >= 0.0 && x <= 0.95)) throw DomainError("CUBIC: requires 0 <= x <= 0.95");
  const CubicArgument m = cubic_arg_map(x);
  const EvalResult lhs = cubic_lhs(m.argument, m.complement, tol);
  const EvalResult rhs = eval_auto(kCubicParams, x * x * x, tol);
  return make_sides(lhs.value, lhs.route, m.multiplier * rhs.value, rhs.route);
}

double residual_cubic(double x, double tol) { return cubic_sides(x, tol).abs_residual(); }

double C1(double t) {
  return pochhammer(2.0 / 3.0, t) * pochhammer(7.0 / 6.0, t) /
         (pochhammer(0.75, t) * pochhammer(13.0 / 12.0, t));
}

const std::vector<std::string>& catalog_ids() { return registry().ids; }

EntryKind kind_of(std::string_view id) {
  const auto& kinds = registry().kinds;
  const auto it = kinds.find(id);
  if (it == kinds.end()) throw UnknownIdError("catalog: unknown id '" + std::string(id) + "'");
  return it->second;
}

const IdentityEntry& identity_entry(std::string_view id) {
  return find_entry(registry().identities, id, "identity_entry");
}

const ClosedFormEntry& closed_form_entry(std::string_view id) {
  return find_entry(registry().closed_forms, id, "closed_form_entry");
}

const RatioEntry& ratio_entry(std::string_view id) { return find_entry(registry().ratios, id, "ratio_entry"); }

double closed_form_value(std::string_view id, std::optional<double> a) {
  const ClosedFormEntry& entry = closed_form_entry(id);
  if (entry.parametric && !a) throw DomainError(entry.id + ": parameter a is required");
  if (!entry.parametric && a) throw DomainError(entry.id + ": takes no parameter a");
  return entry.closed_form(a.value_or(0.0));
}

double ClosedFormCheck::abs_residual() const { return std::fabs(engine.value - closed_form); }

double ClosedFormCheck::rel_residual() const {
  return closed_form == 0.0 ? abs_residual() : abs_residual() / std::fabs(closed_form);
}

ClosedFormCheck check_closed_form(std::string_view id, std::optional<double> a, double tol) {
  const ClosedFormEntry& entry = closed_form_entry(id);
  const double closed = closed_form_value(id, a);
  const EvalResult engine = eval_auto(entry.params(a.value_or(0.0)), entry.argument, tol);
  const bool route_ok = !entry.required_route || *entry.required_route == engine.route;
  return {closed, engine, route_ok};
}

RatioFamily ratio_family(std::string_view id) { return ratio_entry(id).family; }

std::string_view to_string(RatioFamily family) {
  switch (family) {
    case RatioFamily::R1: return "R1";
    case RatioFamily::R2: return "R2";
    case RatioFamily::R3: return "R3";
  }
  return "?";
}

double ratio_law(RatioFamily family, double a) {
  switch (family) {
    case RatioFamily::R1: return ratio_prefactor(a) * cos_half_pi(a + 1.0 / 6.0);
    case RatioFamily::R2: return ratio_prefactor(a) * cos_half_pi(a - 1.0 / 6.0);
    case RatioFamily::R3: return kSqrt2 * (kSqrt3 - 1.0) * cos_half_pi(a + 1.0 / 6.0);
  }
  throw UnknownIdError("ratio_law: unknown family");
}

double ratio_law_trig(double a) {
  return std::pow(4.0, a) * std::pow(std::cos(kPi / 12.0), 2.0 * a - 1.0) * cos_half_pi(a + 1.0 / 6.0);
}

RatioParts ratio_parts(RatioFamily family, double a, double tol) {
  const CatalogConstants& k = catalog_constants();
  switch (family) {
    case RatioFamily::R1: {
      const Hyp2F1Params p(a, 1.0 - 2.0 * a, 4.0 / 3.0 - a);
      return {eval_auto(p, k.z0, tol), eval_auto(p, k.z1, tol)};
    }
    case RatioFamily::R2: {
      const Hyp2F1Params p(a, 2.0 - 2.0 * a, 5.0 / 3.0 - a);
      return {eval_auto(p, k.z0, tol), eval_auto(p, k.z1, tol)};
    }
    case RatioFamily::R3: {
      const Hyp2F1Params p(a, a + 1.0 / 3.0, 4.0 / 3.0 - a);
      return {eval_auto(p, k.y0, tol), eval_auto(p, k.y1, tol)};
    }
  }
  throw UnknownIdError("ratio_parts: unknown family");
}

double ratio_numeric(RatioFamily family, double a, double tol) { return ratio_parts(family, a, tol).ratio(); }

}  // namespace rbbg
