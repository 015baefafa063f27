#include "doctest.h"

#include <stdexcept>

#include "fracbody/constants.hpp"
#include "fracbody/report_io.hpp"
#include "fracbody/reports.hpp"

#include <cmath>
#include <memory>
#include <numbers>

using namespace fracbody;

namespace {

constexpr double kPi = std::numbers::pi;

HarnessConfig small_cfg(int n, double radius, int box_points = 0) {
    HarnessConfig h;
    h.sphere_level = n == 2 ? 12 : 8;
    h.quad = default_proj_quad(n, radius);
    if (box_points > 0)
        h.quad.box = BoxQuad::make(n, h.quad.box.half_extent, box_points);
    if (n == 2) h.quad.box = BoxQuad::make(2, h.quad.box.half_extent, 48);
    h.quad.tgrid.points = 100;
    h.measure_points = n == 2 ? 600 : 4000;
    h.rearrange_levels = 128;
    return h;
}

double scalar_of(const Report& r, const std::string& name) {
    for (const auto& [k, v] : r.scalars)
        if (k == name) return v;
    throw std::logic_error("missing scalar " + name);
}

}  // namespace

TEST_CASE("sobolev chain: radial gaussian has B = C and passes") {
    const FracParams params = validate_params(2, 0.5, 2.0);
    const FieldSpec f = FieldSpec::gaussian(2, 1.0);
    const Report r = sobolev_chain_report(f, params, small_cfg(2, 8.0));
    CHECK(r.all_pass());
    const double b = scalar_of(r, "B_volume_route");
    const double c = scalar_of(r, "C_seminorm");
    CHECK(b <= c * 1.0001);
    CHECK(b == doctest::Approx(c).epsilon(0.02));
    CHECK(scalar_of(r, "A_over_B") > 0.0);
}

TEST_CASE("sobolev chain: shear keeps B invariant while C grows") {
    const FracParams params = validate_params(2, 0.5, 2.0);
    const FieldSpec f = FieldSpec::gaussian(2, 1.0);
    const double shear[4] = {1.0, 1.1, 0.0, 1.0};
    const AffineMap phi = AffineMap::sl_normalized(2, shear);
    const FieldSpec fphi = f.with_affine(phi);

    const HarnessConfig cfg_base = small_cfg(2, 8.0);
    const HarnessConfig cfg_shear = small_cfg(2, fphi.effective_radius());
    const Report r0 = sobolev_chain_report(f, params, cfg_base);
    const Report r1 = sobolev_chain_report(fphi, params, cfg_shear);
    CHECK(r1.all_pass());
    CHECK(scalar_of(r1, "B_volume_route") ==
          doctest::Approx(scalar_of(r0, "B_volume_route")).epsilon(0.02));
    CHECK(scalar_of(r1, "C_seminorm") > scalar_of(r0, "C_seminorm") * 1.02);
}

TEST_CASE("abs-value reduction: equality for one sign, strict drop for two signs") {
    const FracParams params = validate_params(1, 0.3, 2.0);
    const HarnessConfig cfg = small_cfg(1, 4.5, 1200);

    const Report pos = abs_value_reduction_check(FieldSpec::gaussian(1, 1.0), params, cfg);
    CHECK(pos.all_pass());
    CHECK(scalar_of(pos, "seminorm_abs_f") ==
          doctest::Approx(scalar_of(pos, "seminorm_f")).epsilon(1e-10));

    const FieldSpec two_bump = FieldSpec::bump(1, 1.0, Vec{2.0, 0.0, 0.0})
                                   .plus(FieldSpec::bump(1, 1.0, Vec{-2.0, 0.0, 0.0}, -1.0));
    const Report signed_r = abs_value_reduction_check(two_bump, params, cfg);
    CHECK(signed_r.all_pass());
    CHECK(scalar_of(signed_r, "gap") > 0.01 * scalar_of(signed_r, "seminorm_f"));

    const Report neg = abs_value_reduction_check(two_bump.negated(), params, cfg);
    CHECK(scalar_of(neg, "seminorm_f") ==
          doctest::Approx(scalar_of(signed_r, "seminorm_f")).epsilon(1e-12));
}

TEST_CASE("affine polya-szego report: equality cases and strict case") {
    const FracParams params = validate_params(2, 0.3, 2.0);

    const Report radial =
        affine_ps_report(FieldSpec::gaussian(2, 1.0), params, small_cfg(2, 8.0));
    CHECK(radial.all_pass());
    CHECK(std::abs(scalar_of(radial, "sym_equality_gap")) < 0.02);

    const double shear[4] = {1.0, 0.9, 0.0, 1.0};
    const FieldSpec sheared = FieldSpec::gaussian(2, 1.0)
                                  .with_affine(AffineMap::sl_normalized(2, shear))
                                  .translated(Vec{0.4, -0.3, 0.0});
    const Report affine =
        affine_ps_report(sheared, params, small_cfg(2, sheared.effective_radius()));
    CHECK(affine.all_pass());
    CHECK(std::abs(scalar_of(affine, "sym_equality_gap")) < 0.02);

    const FieldSpec two = FieldSpec::gaussian(2, 1.0, Vec{1.3, 0.0, 0.0})
                              .plus(FieldSpec::gaussian(2, 0.5, Vec{-1.5, 0.5, 0.0}, 0.7));
    const Report strict = affine_ps_report(two, params, small_cfg(2, two.effective_radius()));
    CHECK(strict.all_pass());
    CHECK(scalar_of(strict, "sym_equality_gap") > 0.03);
}

TEST_CASE("asymmetric strengthening: identity, even equality, skewed strictness") {
    const FracParams params = validate_params(2, 0.3, 2.0);

    const Report even =
        asym_strengthening_report(FieldSpec::gaussian(2, 1.0), params, small_cfg(2, 8.0));
    CHECK(even.all_pass());
    CHECK(scalar_of(even, "plus_minus_dilates") == 1.0);
    CHECK(std::abs(scalar_of(even, "strengthening_gap")) < 0.02);

    const FieldSpec skew = FieldSpec::gaussian(2, 1.0, Vec{0.6, 0.0, 0.0})
                               .plus(FieldSpec::gaussian(2, 0.45, Vec{-0.9, 0.3, 0.0}, 0.8));
    const Report strict =
        asym_strengthening_report(skew, params, small_cfg(2, skew.effective_radius()));
    CHECK(strict.all_pass());
    CHECK(scalar_of(strict, "plus_minus_dilates") == 0.0);
    CHECK(scalar_of(strict, "strengthening_gap") > 0.005);
    CHECK(scalar_of(strict, "radial_sum_identity_max_rel_error") < 1e-6);
}

TEST_CASE("optimal body: self-equality, radial ball candidate, random candidates") {
    const FracParams params = validate_params(2, 0.3, 2.0);
    const FieldSpec skew = FieldSpec::gaussian(2, 1.0, Vec{0.5, 0.0, 0.0})
                               .plus(FieldSpec::gaussian(2, 0.5, Vec{-0.8, 0.4, 0.0}, 0.7));
    const Report r = optimal_body_report(skew, params, 60, 424242, small_cfg(2, skew.effective_radius()));
    CHECK(r.all_pass());
    CHECK(scalar_of(r, "violations") == 0.0);
    CHECK(scalar_of(r, "min_margin") > 0.0);

    // radial field: the normalized body is a ball, so the unit ball candidate ties
    const FracParams p2 = validate_params(2, 0.4, 2.0);
    const FieldSpec radial = FieldSpec::gaussian(2, 1.0);
    const HarnessConfig cfg = small_cfg(2, 8.0);
    const auto grid = std::make_shared<SphereGrid>(sphere_grid(2, cfg.sphere_level));
    const ProjBodyResult proj =
        build_frac_body(radial, p2, grid, BodyVariant::Sym, cfg.quad, cfg.threads);
    const StarBody hat = normalized_to_volume(proj.body, omega_n(2));
    const StarBody unit = ball_body(grid);
    CHECK(anisotropic_energy(unit, proj) ==
          doctest::Approx(anisotropic_energy(hat, proj)).epsilon(0.02));
}

TEST_CASE("bbm limit report: closed-form target at n = 1 and scaling in K") {
    HarnessConfig cfg;
    cfg.quad.box = BoxQuad::make(1, 8.5, 1000);
    cfg.quad.tgrid.t_min = 1e-3;
    cfg.quad.tgrid.t_max = 100.0;
    cfg.quad.tgrid.points = 160;
    const FieldSpec f = FieldSpec::gaussian(1, 1.0);
    const auto grid = std::make_shared<SphereGrid>(sphere_grid(1, 1));
    const StarBody unit = ball_body(grid);

    const Report r = bbm_limit_report(f, unit, 2.0, {0.5, 0.7, 0.9, 0.95}, cfg);
    CHECK(r.all_pass());
    const double target = scalar_of(r, "target_general_k");
    CHECK(target == doctest::Approx(2.0 * std::sqrt(kPi / 2.0)).epsilon(1e-6));
    CHECK(scalar_of(r, "alpha_np_times_grad_energy") ==
          doctest::Approx(target).epsilon(1e-6));
    CHECK(scalar_of(r, "final_residual_over_target") < 0.10);

    // doubling K multiplies the target by 2^(n+p) = 8
    const Report r2 = bbm_limit_report(f, ball_body(grid, 2.0), 2.0, {0.5, 0.7}, cfg);
    CHECK(scalar_of(r2, "target_general_k") == doctest::Approx(8.0 * target).epsilon(1e-8));

    CHECK_THROWS_AS(
        bbm_limit_report(FieldSpec::ball_indicator(1, 1.0), unit, 2.0, {0.5, 0.7}, cfg),
        std::domain_error);
}

TEST_CASE("reports serialize deterministically") {
    const FracParams params = validate_params(2, 0.5, 2.0);
    const FieldSpec f = FieldSpec::gaussian(2, 1.0);
    const HarnessConfig cfg = small_cfg(2, 8.0);
    const Report a = sobolev_chain_report(f, params, cfg);
    const Report b = sobolev_chain_report(f, params, cfg);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_to_csv(a) == report_to_csv(b));
    CHECK(report_to_csv(a).rfind("record,name", 0) == 0);
}
