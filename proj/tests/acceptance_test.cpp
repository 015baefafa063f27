// Acceptance suite: every top-level guarantee of the library, one printed
// line per criterion, nonzero exit if any fails. Budgets are asserted in
// wall-clock seconds.

#include "fracbody/constants.hpp"
#include "fracbody/proj_body.hpp"
#include "fracbody/rearrange.hpp"
#include "fracbody/reports.hpp"
#include "fracbody/rng.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

using namespace fracbody;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void criterion(int index, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    const double t0 = now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed = now() - t0;
    if (elapsed > budget_seconds) {
        ok = false;
        detail += " [over budget]";
    }
    std::printf("[%s] criterion %2d: %s (%.1fs/%.0fs) %s\n", ok ? "PASS" : "FAIL",
                index, label.c_str(), elapsed, budget_seconds, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

ProjQuad quad_for(int n, double radius, int box_points = 0, int t_points = 0) {
    ProjQuad q;
    const double L = radius + 0.5;
    int m = box_points;
    if (m <= 0) m = n == 1 ? 2000 : (n == 2 ? 56 : 24);
    q.box = BoxQuad::make(n, L, m);
    q.tgrid.t_min = 1e-3;
    q.tgrid.t_max = 100.0;
    q.tgrid.points = t_points > 0 ? t_points : (n == 1 ? 160 : 100);
    return q;
}

HarnessConfig harness_for(int n, double radius, int level, int box_points = 0) {
    HarnessConfig h;
    h.sphere_level = level;
    h.quad = quad_for(n, radius, box_points);
    h.measure_points = n == 1 ? 6000 : 700;
    h.rearrange_levels = 128;
    return h;
}

std::string fmt(const char* pattern, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

}  // namespace

int main() {
    // 1. closed-form gauge oracle: gauge^ps of the unit-interval indicator
    criterion(1, "closed-form 1-D indicator gauge (0.5%)", 5.0, [](std::string& detail) {
        const FieldSpec f = FieldSpec::ball_indicator(1, 0.5, Vec{0.5, 0.0, 0.0});
        const FracParams params = validate_params(1, 0.25, 2.0);  // ps = 1/2
        const double gauge =
            frac_gauge(f, Vec{1.0, 0.0, 0.0}, params, quad_for(1, 1.5));
        const double value = std::pow(gauge, params.ps);
        detail = fmt("gauge^ps = %.6f vs 8 (rel err %.2e)", value,
                     std::abs(value - 8.0) / 8.0);
        return std::abs(value - 8.0) <= 0.005 * 8.0;
    });

    // 2. energy identity, production route vs double-integral oracle
    criterion(2, "energy identity 3 fields x 3 bodies, n = 1 and 2 (2%)", 180.0,
              [](std::string& detail) {
        double worst = 0.0;
        // n = 1
        {
            const FracParams params = validate_params(1, 0.25, 2.0);
            const auto grid = std::make_shared<SphereGrid>(sphere_grid(1, 1));
            std::vector<FieldSpec> fields = {
                FieldSpec::ball_indicator(1, 0.5, Vec{0.5, 0.0, 0.0}),
                FieldSpec::gaussian(1, 1.0),
                FieldSpec::bump(1, 1.5, Vec{0.3, 0.0, 0.0})};
            std::vector<StarBody> bodies = {
                ball_body(grid), StarBody(grid, {1.4, 0.7}),
                random_star_body(11, 1, grid)};
            for (const auto& f : fields) {
                const double radius = f.effective_radius();
                const ProjQuad q = quad_for(1, radius);
                const ProjBodyResult proj =
                    build_frac_body(f, params, grid, BodyVariant::Sym, q);
                for (const auto& K : bodies) {
                    const double a = anisotropic_energy(K, proj);
                    const double b =
                        direct_double_energy(f, K, params, 4000, radius + 0.5);
                    worst = std::max(worst, std::abs(a - b) / b);
                }
            }
        }
        // n = 2
        {
            const FracParams params = validate_params(2, 0.25, 2.0);
            const auto grid = std::make_shared<SphereGrid>(sphere_grid(2, 12));
            const double diag[4] = {1.4, 0.0, 0.0, 1.0 / 1.4};
            std::vector<FieldSpec> fields = {
                FieldSpec::gaussian(2, 1.0),
                FieldSpec::gaussian(2, 0.8, Vec{0.6, -0.3, 0.0}),
                FieldSpec::gaussian(2, 1.0, Vec{0.5, 0.2, 0.0})
                    .plus(FieldSpec::gaussian(2, 0.5, Vec{-0.7, 0.0, 0.0}, 0.7))};
            std::vector<StarBody> bodies = {
                ball_body(grid),
                linear_image(AffineMap(2, diag, nullptr), ball_body(grid)),
                random_star_body(5, 2, grid)};
            for (const auto& f : fields) {
                const double radius = f.effective_radius();
                const ProjQuad q = quad_for(2, radius, 64);
                const ProjBodyResult proj =
                    build_frac_body(f, params, grid, BodyVariant::Sym, q);
                for (const auto& K : bodies) {
                    const double a = anisotropic_energy(K, proj);
                    const double b =
                        direct_double_energy(f, K, params, 130, radius + 0.5);
                    worst = std::max(worst, std::abs(a - b) / b);
                }
            }
        }
        detail = fmt("worst relative mismatch %.4f (cap %.2f)", worst, 0.02);
        return worst <= 0.02;
    });

    // 3. dual mixed volume inequality and dual Brunn-Minkowski
    criterion(3, "dual mixed volume + dual BM, 50 pairs each", 10.0,
              [](std::string& detail) {
        bool ok = true;
        double min_gap = 1e300;
        for (int n = 2; n <= 3; ++n) {
            const auto grid =
                std::make_shared<SphereGrid>(sphere_grid(n, n == 2 ? 32 : 8));
            const double alpha = 1.3;
            for (int trial = 0; trial < 50; ++trial) {
                const StarBody a = random_star_body(1000 + trial, n, grid);
                const StarBody b = random_star_body(5000 + trial, n, grid);
                const double lhs = dual_mixed_volume(a, b, alpha);
                const double rhs = std::pow(volume(a), (n - alpha) / n) *
                                   std::pow(volume(b), alpha / n);
                ok = ok && lhs < rhs;
                min_gap = std::min(min_gap, (rhs - lhs) / rhs);

                const double q = 0.9;
                const double bm_lhs =
                    std::pow(volume(radial_sum(a, b, -q)), -q / n);
                const double bm_rhs =
                    std::pow(volume(a), -q / n) + std::pow(volume(b), -q / n);
                ok = ok && bm_lhs >= bm_rhs * (1.0 - 1e-12);
                // dilate equality cases
                const StarBody dil = scaled(a, 1.0 + 0.01 * trial);
                const double de = dual_mixed_volume(a, dil, alpha) /
                                  (std::pow(volume(a), (n - alpha) / n) *
                                   std::pow(volume(dil), alpha / n));
                ok = ok && std::abs(de - 1.0) < 1e-8;
                const double be =
                    std::pow(volume(radial_sum(a, dil, -q)), -q / n) /
                    (std::pow(volume(a), -q / n) + std::pow(volume(dil), -q / n));
                ok = ok && std::abs(be - 1.0) < 1e-8;
            }
        }
        detail = fmt("min non-dilate gap %.3e, dilate equality within %.0e", min_gap, 1e-8);
        return ok && min_gap > 0.0;
    });

    // 4. constant-free Sobolev chain over the field/parameter matrix
    criterion(4, "Sobolev chain B <= C, 5 fields x 3 triples; radial B = C (2%)",
              300.0, [](std::string& detail) {
        const double shear[4] = {1.0, 0.8, 0.0, 1.0};
        const AffineMap phi = AffineMap::sl_normalized(2, shear);
        struct Entry {
            FieldSpec field;
            bool radial;
        };
        const std::vector<Entry> fields = {
            {FieldSpec::gaussian(2, 1.0), true},
            {FieldSpec::bump(2, 2.5), true},
            {FieldSpec::bubble(2, 0.35), true},
            {FieldSpec::gaussian(2, 0.9, Vec{0.7, -0.2, 0.0}).with_affine(phi), false},
            {FieldSpec::gaussian(2, 1.0, Vec{0.5, 0.0, 0.0})
                 .plus(FieldSpec::gaussian(2, 0.5, Vec{-0.8, 0.3, 0.0}, 0.7)),
             false}};
        const std::vector<std::pair<double, double>> sp = {
            {0.25, 2.0}, {0.5, 2.0}, {0.3, 2.5}};
        double worst_eq = 0.0;
        for (const auto& entry : fields) {
            for (const auto& [s, p] : sp) {
                const FracParams params = validate_params(2, s, p);
                const HarnessConfig cfg =
                    harness_for(2, entry.field.effective_radius(), 12);
                const Report r = sobolev_chain_report(entry.field, params, cfg);
                if (!r.all_pass()) {
                    detail = "B <= C failed for a matrix entry";
                    return false;
                }
                if (entry.radial) {
                    double b = 0.0, c = 0.0;
                    for (const auto& [k, v] : r.scalars) {
                        if (k == "B_volume_route") b = v;
                        if (k == "C_seminorm") c = v;
                    }
                    worst_eq = std::max(worst_eq, std::abs(b - c) / c);
                }
            }
        }
        detail = fmt("all B <= C; worst radial |B-C|/C = %.4f (cap %.2f)", worst_eq, 0.02);
        return worst_eq <= 0.02;
    });

    // 5. affine invariance of the volume form under SL(2) shears
    criterion(5, "SL(2) invariance of vol^(-ps/n); Euclidean route grows", 300.0,
              [](std::string& detail) {
        const FracParams params = validate_params(2, 0.5, 2.0);
        const FieldSpec f = FieldSpec::gaussian(2, 1.0);
        const HarnessConfig base_cfg = harness_for(2, f.effective_radius(), 12);
        const Report base = sobolev_chain_report(f, params, base_cfg);
        double b0 = 0.0, c0 = 0.0;
        for (const auto& [k, v] : base.scalars) {
            if (k == "B_volume_route") b0 = v;
            if (k == "C_seminorm") c0 = v;
        }
        Rng rng(2024);
        double worst_b = 0.0;
        int c_grew = 0;
        for (int trial = 0; trial < 5; ++trial) {
            const double a = (trial % 2 ? -1.0 : 1.0) * rng.uniform(0.6, 1.4);
            const double m[4] = {1.0, a, 0.0, 1.0};
            const AffineMap phi = AffineMap::sl_normalized(2, m);
            const FieldSpec fphi = f.with_affine(phi);
            const HarnessConfig cfg = harness_for(2, fphi.effective_radius(), 12, 72);
            const Report r = sobolev_chain_report(fphi, params, cfg);
            double b = 0.0, c = 0.0;
            for (const auto& [k, v] : r.scalars) {
                if (k == "B_volume_route") b = v;
                if (k == "C_seminorm") c = v;
            }
            worst_b = std::max(worst_b, std::abs(b - b0) / b0);
            if (c > c0 * 1.001) ++c_grew;
        }
        detail = fmt("worst B drift %.4f (cap 0.02); C grew in %1.0f/5 shears",
                     worst_b, static_cast<double>(c_grew));
        return worst_b <= 0.02 && c_grew >= 4;
    });

    // 6. affine Polya-Szego with equality for SL-translated radial fields
    criterion(6, "affine Polya-Szego: lhs >= rhs; radial-image equality (2%)", 300.0,
              [](std::string& detail) {
        const FracParams params = validate_params(2, 0.3, 2.0);
        const double shear[4] = {1.0, 0.9, 0.0, 1.0};
        const FieldSpec radial = FieldSpec::gaussian(2, 1.0);
        const FieldSpec moved = FieldSpec::gaussian(2, 1.0)
                                    .with_affine(AffineMap::sl_normalized(2, shear))
                                    .translated(Vec{0.5, -0.3, 0.0});
        const FieldSpec skew =
            FieldSpec::gaussian(2, 1.0, Vec{1.2, 0.0, 0.0})
                .plus(FieldSpec::gaussian(2, 0.5, Vec{-1.4, 0.5, 0.0}, 0.7));
        double worst_eq = 0.0;
        for (const FieldSpec* f : {&radial, &moved}) {
            const Report r = affine_ps_report(
                *f, params, harness_for(2, f->effective_radius(), 12));
            if (!r.all_pass()) {
                detail = "inequality failed on an equality-case field";
                return false;
            }
            for (const auto& [k, v] : r.scalars)
                if (k == "sym_equality_gap" || k == "plus_equality_gap")
                    worst_eq = std::max(worst_eq, std::abs(v));
        }
        const Report strict =
            affine_ps_report(skew, params, harness_for(2, skew.effective_radius(), 12));
        if (!strict.all_pass()) {
            detail = "inequality failed on the skewed field";
            return false;
        }
        double strict_gap = 0.0;
        for (const auto& [k, v] : strict.scalars)
            if (k == "sym_equality_gap") strict_gap = v;
        detail = fmt("worst equality gap %.4f (cap 0.02); strict-case gap %.4f",
                     worst_eq, strict_gap);
        return worst_eq <= 0.02 && strict_gap > 0.02;
    });

    // 7. asymmetric strengthening
    criterion(7, "asym strengthening: nodewise identity 1e-6, dual-BM volume form",
              180.0, [](std::string& detail) {
        const FracParams params = validate_params(2, 0.3, 2.0);
        const FieldSpec even = FieldSpec::gaussian(2, 1.0);
        const FieldSpec skew =
            FieldSpec::gaussian(2, 1.0, Vec{0.6, 0.0, 0.0})
                .plus(FieldSpec::gaussian(2, 0.45, Vec{-0.9, 0.3, 0.0}, 0.8));
        const Report re =
            asym_strengthening_report(even, params, harness_for(2, even.effective_radius(), 12));
        const Report rs =
            asym_strengthening_report(skew, params, harness_for(2, skew.effective_radius(), 12));
        double even_gap = 1e300, skew_gap = 0.0, identity_err = 0.0;
        for (const auto& [k, v] : re.scalars)
            if (k == "strengthening_gap") even_gap = std::abs(v);
        for (const auto& [k, v] : rs.scalars) {
            if (k == "strengthening_gap") skew_gap = v;
            if (k == "radial_sum_identity_max_rel_error")
                identity_err = std::max(identity_err, v);
        }
        for (const auto& [k, v] : re.scalars)
            if (k == "radial_sum_identity_max_rel_error")
                identity_err = std::max(identity_err, v);
        detail = fmt("identity err %.2e; even gap %.4f", identity_err, even_gap) +
                 fmt(", skew gap %.4f (needs > %.3f)", skew_gap, 0.002);
        return re.all_pass() && rs.all_pass() && identity_err <= 1e-6 &&
               even_gap <= 0.02 && skew_gap > 0.002;
    });

    // 8. Riesz rearrangement at n = 2
    criterion(8, "Riesz: 50 random indicator triples (2%), ellipsoid equality", 180.0,
              [](std::string& detail) {
        Rng rng(99);
        const BoxQuad measure_box = BoxQuad::make(2, 4.0, 500);
        int violations = 0;
        for (int trial = 0; trial < 50; ++trial) {
            auto rand_ball = [&]() {
                return FieldSpec::ball_indicator(
                    2, rng.uniform(0.4, 1.1),
                    Vec{rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2), 0.0});
            };
            const GapResult gap =
                riesz_gap(rand_ball(), rand_ball(), rand_ball(), 80, 4.0, measure_box, 128);
            if (!(gap.lhs <= gap.rhs * 1.02)) ++violations;
        }
        // Burchard instance: common ellipse, radii 1.0 / 0.8 / 1.5, c = a + b
        const double diag[4] = {1.3, 0.4, 0.0, 0.77};
        const AffineMap phi(2, diag, nullptr);
        const Vec a{0.5, -0.2, 0.0}, b{-0.3, 0.4, 0.0};
        const FieldSpec g = FieldSpec::ball_indicator(2, 1.0).with_affine(phi).translated(a);
        const FieldSpec k = FieldSpec::ball_indicator(2, 0.8).with_affine(phi).translated(b);
        const FieldSpec f =
            FieldSpec::ball_indicator(2, 1.5).with_affine(phi).translated(a + b);
        const GapResult eq =
            riesz_gap(f, k, g, 110, 5.0, BoxQuad::make(2, 5.0, 600), 128);
        const double eq_err = std::abs(eq.lhs - eq.rhs) / eq.rhs;
        detail = fmt("violations %1.0f/50; equality err %.4f (cap 0.02)",
                     static_cast<double>(violations), eq_err);
        return violations == 0 && eq_err <= 0.02;
    });

    // 9. limit behavior: p(1-s) energy -> alpha * gradient energy
    criterion(9, "limit sweep residuals fall; final < 10% of 2 sqrt(pi/2)", 120.0,
              [](std::string& detail) {
        HarnessConfig cfg;
        cfg.quad = quad_for(1, 8.0, 1200, 160);
        const FieldSpec f = FieldSpec::gaussian(1, 1.0);
        const auto grid = std::make_shared<SphereGrid>(sphere_grid(1, 1));
        const Report r =
            bbm_limit_report(f, ball_body(grid), 2.0, {0.5, 0.7, 0.9, 0.95}, cfg);
        double final_ratio = 1e300;
        for (const auto& [k, v] : r.scalars)
            if (k == "final_residual_over_target") final_ratio = v;
        detail = fmt("monotone: %1.0f; final residual / target = %.4f", r.all_pass() ? 1.0 : 0.0,
                     final_ratio);
        return r.all_pass() && final_ratio < 0.10;
    });

    // 10. optimal body: normalized build beats 200 random candidates
    criterion(10, "optimal body strictly minimal over 200 candidates", 600.0,
              [](std::string& detail) {
        const FracParams params = validate_params(2, 0.3, 2.0);
        const FieldSpec skew =
            FieldSpec::gaussian(2, 1.0, Vec{0.5, 0.0, 0.0})
                .plus(FieldSpec::gaussian(2, 0.5, Vec{-0.8, 0.4, 0.0}, 0.7));
        const Report r = optimal_body_report(
            skew, params, 200, 31337, harness_for(2, skew.effective_radius(), 12));
        double violations = 1e300, min_margin = -1.0;
        for (const auto& [k, v] : r.scalars) {
            if (k == "violations") violations = v;
            if (k == "min_margin") min_margin = v;
        }
        detail = fmt("violations %1.0f; min margin %.4f", violations, min_margin);
        return r.all_pass() && violations == 0.0 && min_margin > 0.0;
    });

    if (failures == 0) std::printf("acceptance: all criteria passed\n");
    else std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
