#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "rbbg/catalog.hpp"
#include "rbbg/errors.hpp"
#include "rbbg/maps.hpp"
#include "rbbg/special.hpp"

using namespace rbbg;

namespace {

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

const double kSqrt3 = std::sqrt(3.0);

// Reference values from a 40-digit mpmath evaluation.
constexpr double kComm = 1.7514579095234968;
constexpr double kLhsTable[][2] = {
    {-0.49, 2.7631957941473287718}, {-0.45, 1.8864972990264728915}, {-0.3, 1.21540957947846558},
    {0.5, 1.2905468138800526034},   {0.9, 2.2328321260777855749},   {0.99, 3.5241048344582121748},
};

double grid(double lo, double hi, int i, int n) { return lo + (hi - lo) * i / (n - 1); }

}  // namespace

TEST_CASE("catalog constants") {
  const CatalogConstants& k = catalog_constants();
  CHECK(rel_err(k.z0, (kSqrt3 + 2.0) / (3.0 * kSqrt3)) <= 1e-15);
  CHECK(rel_err(k.y0, k.z0 / (k.z0 - 1.0)) <= 1e-14);
  CHECK(rel_err(k.y1, k.z1 / (k.z1 - 1.0)) <= 1e-14);
  CHECK(rel_err(k.y0, -std::pow((kSqrt3 + 1.0) / 2.0, 3)) <= 1e-14);
  CHECK(rel_err(k.y1, std::pow((kSqrt3 - 1.0) / 2.0, 3)) <= 1e-14);
}

TEST_CASE("RBBG residuals") {
  CHECK(residual_rbbg(0.0) == 0.0);
  const EscapeConstants& e = escape_points();
  CHECK(residual_rbbg(e.p_nine) <= 1e-11);
  CHECK(residual_rbbg(-0.3) <= 1e-10);
  for (const auto& row : kLhsTable) {
    INFO("p = " << row[0]);
    const IdentitySides s = rbbg_sides(row[0]);
    CHECK(rel_err(s.lhs, row[1]) <= 1e-12);
    CHECK(s.rel_residual() <= 1e-11);
  }
  CHECK(rbbg_sides(-0.45).rhs_route == Route::PfaffContinuation);
  CHECK(rbbg_sides(0.3).rhs_route == Route::DirectSeries);
  CHECK_THROWS_AS(rbbg_sides(-0.45, RbbgBranch::Direct), DomainError);
  CHECK_THROWS_AS(rbbg_sides(0.9, RbbgBranch::Pfaff), DomainError);
  CHECK_THROWS_AS(residual_rbbg(-0.5), std::domain_error);
  CHECK_THROWS_AS(residual_rbbg(1.0), std::domain_error);
}

TEST_CASE("escape-point value") {
  const double lhs = rbbg_sides(escape_points().p_star).lhs;
  CHECK(std::fabs(lhs - 1.7514579) <= 5e-7);
  CHECK(rel_err(lhs, closed_form_value("COMM")) <= 1e-10);
  CHECK(rel_err(closed_form_value("COMM"), kComm) <= 1e-14);
}

TEST_CASE("property: direct and Pfaff branches agree on the overlap") {
  const EscapeConstants& e = escape_points();
  for (int i = 0; i < 100; ++i) {
    const double p = grid(e.p_star, e.p_star_ell, i, 100);
    INFO("p = " << p);
    CHECK(branch_agreement_sides(p).rel_residual() <= 1e-10);
  }
}

TEST_CASE("corollary, companion and cubic examples") {
  CHECK(residual_corollary(0.5) <= 1e-9);
  CHECK(residual_corollary(escape_points().p_nine) <= 1e-9);
  CHECK_THROWS_AS(residual_corollary(0.0), DomainError);
  CHECK(residual_companion(0.0) == 0.0);
  CHECK(residual_companion(0.5) <= 1e-10);
  CHECK(residual_companion(0.9) <= 1e-9);
  CHECK_THROWS_AS(residual_companion(-0.1), DomainError);
  CHECK(residual_cubic(0.0) == 0.0);
  CHECK(residual_cubic(0.7) <= 1e-9);
  const double x = (kSqrt3 - 1.0) / 2.0;
  CHECK(residual_cubic(x) <= 1e-10);
  // the sqrt3 ratio
  const IdentitySides s = cubic_sides(x);
  CHECK(rel_err(s.lhs / (s.rhs / kSqrt3), kSqrt3) <= 1e-10);
  CHECK_THROWS_AS(residual_cubic(0.96), DomainError);
}

TEST_CASE("property: identity families on 200-point grids") {
  for (int i = 0; i < 200; ++i) {
    const double p = grid(1e-6, 1.0 - 1e-6, i, 200);
    INFO("p = " << p);
    CHECK(corollary_sides(p).rel_residual() <= 1e-9);
    const double q = grid(0.0, 1.0 - 1e-6, i, 200);
    CHECK(companion_sides(q).rel_residual() <= 1e-9);
    const double x = grid(0.0, 0.9, i, 200);
    CHECK(cubic_sides(x).rel_residual() <= 1e-9);
  }
}

TEST_CASE("C1") {
  CHECK(C1(0.0) == 1.0);
  CHECK(rel_err(C1(1.0), 112.0 / 117.0) <= 1e-14);
  CHECK(rel_err(C1(-1.0 / 6.0), 1.026782260912867199) <= 1e-13);
  CHECK_THROWS_AS(C1(-2.0 / 3.0), PoleError);
}

TEST_CASE("closed forms") {
  const double g = rbbg::gamma(0.25);
  CHECK(rel_err(closed_form_value("BR2"), (1.0 + kSqrt3) * g * g / std::pow(2.0 * kSqrt3 * kPi, 1.5)) <= 1e-14);
  CHECK(rel_err(closed_form_value("FF3", 1.0 / 3.0), std::pow(81.0 * kSqrt3 / 128.0, -1.0 / 6.0) * C1(-1.0 / 6.0)) <=
        1e-14);
  CHECK(rel_err(closed_form_value("RS3"), 0.74025321398580672012) <= 1e-13);
  for (const char* id : {"BR2", "BR3", "RS3", "B33", "R33", "COMM"}) {
    INFO("id = " << id);
    const ClosedFormCheck c = check_closed_form(id);
    CHECK(c.rel_residual() <= 1e-9);
    CHECK(c.route_ok);
    CHECK_THROWS_AS(closed_form_value(id, 0.2), DomainError);
  }
  CHECK(check_closed_form("RS3").engine.route == Route::PfaffContinuation);
  CHECK_THROWS_AS(closed_form_value("BF1"), DomainError);
  CHECK_THROWS_AS(closed_form_value("NOPE"), UnknownIdError);
}

TEST_CASE("property: parametric families over a in [-0.9, 0.9]") {
  for (const char* id : {"BF1", "BF1A", "FF3", "LAS"}) {
    for (int i = 0; i < 50; ++i) {
      const double a = grid(-0.9, 0.9, i, 50);
      INFO("id = " << id << ", a = " << a);
      const ClosedFormCheck c = check_closed_form(id, a);
      CHECK(c.rel_residual() <= 1e-9);
      CHECK(c.route_ok);
    }
  }
  CHECK(check_closed_form("LAS", 0.25).engine.route == Route::PfaffContinuation);
}

TEST_CASE("ratio laws") {
  CHECK(rel_err(ratio_law(RatioFamily::R1, 1.0 / 3.0), std::cbrt(2.0 * (kSqrt3 - 1.0))) <= 1e-10);
  CHECK(rel_err(ratio_law(RatioFamily::R3, 1.0 / 3.0), kSqrt3 - 1.0) <= 1e-10);
  CHECK(rel_err(ratio_law(RatioFamily::R1, 0.5), 1.0) <= 1e-10);
  CHECK(rel_err(ratio_law(RatioFamily::R2, 0.5), kSqrt3) <= 1e-10);
  CHECK(rel_err(ratio_law(RatioFamily::R3, 0.0), 1.0) <= 1e-10);
  CHECK(ratio_numeric(RatioFamily::R3, 0.0) == 1.0);
  CHECK(std::fabs(ratio_numeric(RatioFamily::R1, 1.0 / 3.0) - ratio_law(RatioFamily::R1, 1.0 / 3.0)) <= 1e-9);
  CHECK(std::fabs(ratio_numeric(RatioFamily::R2, 0.4) - ratio_law(RatioFamily::R2, 0.4)) <= 1e-9);
  CHECK(ratio_family("R2") == RatioFamily::R2);
  CHECK(to_string(RatioFamily::R3) == "R3");
  CHECK_THROWS_AS(ratio_family("R4"), UnknownIdError);
}

TEST_CASE("property: ratio laws against the engine on [-1, 1]") {
  for (RatioFamily f : {RatioFamily::R1, RatioFamily::R2, RatioFamily::R3}) {
    for (int i = 0; i < 100; ++i) {
      const double a = grid(-1.0, 1.0, i, 100);
      INFO("family = " << to_string(f) << ", a = " << a);
      CHECK(std::fabs(ratio_numeric(f, a) - ratio_law(f, a)) <= 1e-9);
    }
  }
}

TEST_CASE("property: cosine and trigonometric forms of R1 coincide") {
  for (int i = 0; i < 401; ++i) {
    const double a = grid(-2.0, 2.0, i, 401);
    INFO("a = " << a);
    const double law = ratio_law(RatioFamily::R1, a);
    CHECK(std::fabs(law - ratio_law_trig(a)) <= 1e-13 * std::fmax(1.0, std::fabs(law)));
  }
}

TEST_CASE("registry") {
  const std::vector<std::string> want = {"RBBG", "COR", "COMPANION", "CUBIC", "BRR1", "BR2", "BR3", "RS3", "B33",
                                         "R33",  "COMM", "BF1",      "BF1A",  "FF3",  "LAS", "R1",  "R2",  "R3"};
  CHECK(catalog_ids() == want);
  CHECK(kind_of("RBBG") == EntryKind::Identity);
  CHECK(kind_of("COMM") == EntryKind::ClosedForm);
  CHECK(kind_of("R3") == EntryKind::Ratio);
  CHECK_THROWS_AS(kind_of("rbbg"), UnknownIdError);
  CHECK(identity_entry("CUBIC").parameter == "x");
  CHECK(identity_entry("RBBG").domain.contains(-0.49));
  CHECK_FALSE(identity_entry("RBBG").domain.contains(-0.5));
  CHECK(closed_form_entry("LAS").parametric);
  CHECK(closed_form_entry("LAS").required_route == Route::PfaffContinuation);
  CHECK(ratio_entry("R1").family == RatioFamily::R1);
}
