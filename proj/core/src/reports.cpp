#include "fracbody/reports.hpp"

#include "fracbody/constants.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fracbody {

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

class StageTimer {
  public:
    StageTimer(Report& report, std::string name)
        : report_(report), name_(std::move(name)), start_(now_seconds()) {}
    ~StageTimer() { report_.timings.emplace_back(name_, now_seconds() - start_); }

  private:
    Report& report_;
    std::string name_;
    double start_;
};

std::string describe(const FieldSpec& f) {
    std::ostringstream os;
    os << "n=" << f.dim();
    for (const auto& t : f.terms()) {
        os << " " << to_string(t.kind) << "(" << t.radius << ")";
        if (t.scale != 1.0) os << "*" << t.scale;
    }
    return os.str();
}

std::string describe(const FracParams& p) {
    std::ostringstream os;
    os << "n=" << p.n << " s=" << p.s << " p=" << p.p;
    return os.str();
}

/// Euclidean fractional seminorm from the per-node gauges:
/// sum of w * gauge^ps (= n V~_{-ps}(B^n, body)).
double seminorm_from_gauges(const SphereGrid& grid, const std::vector<double>& gauge,
                            double ps) {
    double sum = 0.0;
    for (std::size_t i = 0; i < gauge.size(); ++i)
        sum += grid.weights[i] * std::pow(gauge[i], ps);
    return sum;
}

double volume_form(const ProjBodyResult& body) {
    const int n = body.params.n;
    return std::pow(volume(body.body), -body.params.ps / n);
}

}  // namespace

CheckRow make_check(std::string name, double lhs, std::string relation, double rhs,
                    double tolerance, bool asserted) {
    CheckRow row;
    row.name = std::move(name);
    row.lhs = lhs;
    row.rhs = rhs;
    row.relation = std::move(relation);
    row.tolerance = tolerance;
    row.asserted = asserted;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    if (row.relation == "<=") {
        row.margin = (rhs - lhs) / scale;
        row.pass = lhs <= rhs + tolerance * scale;
    } else if (row.relation == ">=") {
        row.margin = (lhs - rhs) / scale;
        row.pass = lhs >= rhs - tolerance * scale;
    } else if (row.relation == "~=") {
        row.margin = tolerance - std::abs(lhs - rhs) / scale;
        row.pass = std::abs(lhs - rhs) <= tolerance * scale;
    } else {
        throw std::invalid_argument("make_check: relation must be <=, >= or ~=");
    }
    return row;
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRow& c) { return c.pass || !c.asserted; });
}

void Report::add_scalar(std::string name, double value) {
    scalars.emplace_back(std::move(name), value);
}

void Report::add_input(std::string name, std::string value) {
    inputs.emplace_back(std::move(name), std::move(value));
}

ProjQuad default_proj_quad(int n, double radius) {
    ProjQuad q;
    const double L = std::max(radius, 1.0) + 0.5;
    const int points = n == 1 ? 2000 : (n == 2 ? 64 : 24);
    q.box = BoxQuad::make(n, L, points);
    q.tgrid.t_min = 1e-3;
    q.tgrid.t_max = 100.0;
    q.tgrid.points = 120;
    return q;
}

BoxQuad default_measure_box(int n, double radius, int points) {
    const double L = std::max(radius, 1.0) + 0.5;
    if (points <= 0) points = n == 1 ? 8000 : (n == 2 ? 700 : 120);
    return BoxQuad::make(n, L, points);
}

int default_oracle_points(int n) { return n == 1 ? 4000 : 130; }

Report sobolev_chain_report(const FieldSpec& f, const FracParams& params,
                            const HarnessConfig& cfg) {
    Report report;
    report.kind = "sobolev_chain";
    report.add_input("field", describe(f));
    report.add_input("params", describe(params));

    const auto grid = std::make_shared<SphereGrid>(sphere_grid(params.n, cfg.sphere_level));
    FracBodySet bodies = [&] {
        StageTimer timer(report, "bodies");
        return build_frac_bodies(f, params, grid, cfg.quad, cfg.threads);
    }();

    const int n = params.n;
    const double omega = omega_n(n);
    const double a_norm =
        std::pow(box_norm_pow(f, params.sobolev_exp, cfg.quad.box),
                 params.p / params.sobolev_exp);
    const double b_value =
        n * std::pow(omega, (n + params.ps) / n) * volume_form(bodies.sym);
    const double c_value = seminorm_from_gauges(*grid, bodies.sym.gauge, params.ps);

    report.add_scalar("A_sobolev_norm", a_norm);
    report.add_scalar("B_volume_route", b_value);
    report.add_scalar("C_seminorm", c_value);
    report.add_scalar("A_over_B", a_norm / b_value);
    report.add_scalar("A_over_C", a_norm / c_value);
    report.add_scalar("B_over_C", b_value / c_value);
    report.checks.push_back(
        make_check("volume_route_below_seminorm", b_value, "<=", c_value, cfg.tolerance));

    if (f.non_negative()) {
        const double b_plus =
            2.0 * n * std::pow(omega, (n + params.ps) / n) * volume_form(bodies.plus);
        const double c_plus =
            2.0 * seminorm_from_gauges(*grid, bodies.plus.gauge, params.ps);
        report.add_scalar("B_plus_volume_route", b_plus);
        report.add_scalar("C_plus_seminorm", c_plus);
        report.checks.push_back(make_check("asym_volume_route_below_seminorm", b_plus,
                                           "<=", c_plus, cfg.tolerance));
        report.checks.push_back(make_check("asym_at_least_as_strong", b_plus, ">=",
                                           b_value, cfg.tolerance, /*asserted=*/false));
    }
    return report;
}

Report abs_value_reduction_check(const FieldSpec& f, const FracParams& params,
                                 const HarnessConfig& cfg) {
    Report report;
    report.kind = "abs_value_reduction";
    report.add_input("field", describe(f));
    report.add_input("params", describe(params));

    const auto grid = std::make_shared<SphereGrid>(sphere_grid(params.n, cfg.sphere_level));
    StageTimer timer(report, "seminorms");
    const FracProfileSet prof_f(f, params.p, grid, cfg.quad, cfg.threads, false);
    const FracProfileSet prof_abs(f, params.p, grid, cfg.quad, cfg.threads, true);
    const double sem_f =
        seminorm_from_gauges(*grid, prof_f.gauges(params, BodyVariant::Sym), params.ps);
    const double sem_abs =
        seminorm_from_gauges(*grid, prof_abs.gauges(params, BodyVariant::Sym), params.ps);

    report.add_scalar("seminorm_f", sem_f);
    report.add_scalar("seminorm_abs_f", sem_abs);
    report.add_scalar("gap", sem_f - sem_abs);
    report.checks.push_back(
        make_check("abs_does_not_increase_seminorm", sem_abs, "<=", sem_f, cfg.tolerance));
    const bool constant_sign = f.non_negative() || f.negated().non_negative();
    report.add_scalar("constant_sign", constant_sign ? 1.0 : 0.0);
    if (constant_sign)
        report.checks.push_back(
            make_check("constant_sign_equality", sem_abs, "~=", sem_f, 1e-8));
    return report;
}

Report affine_ps_report(const FieldSpec& f, const FracParams& params,
                        const HarnessConfig& cfg) {
    Report report;
    report.kind = "affine_polya_szego";
    report.add_input("field", describe(f));
    report.add_input("params", describe(params));
    if (!f.non_negative())
        throw std::invalid_argument("affine_ps_report: field must be non-negative");

    const auto grid = std::make_shared<SphereGrid>(sphere_grid(params.n, cfg.sphere_level));
    const BoxQuad measure_box =
        default_measure_box(params.n, f.effective_radius(), cfg.measure_points);

    FracBodySet bodies_f = [&] {
        StageTimer timer(report, "bodies_f");
        return build_frac_bodies(f, params, grid, cfg.quad, cfg.threads);
    }();
    const FieldSpec fstar = [&] {
        StageTimer timer(report, "rearrange");
        return schwarz_rearrange(f, cfg.rearrange_levels, measure_box).to_field();
    }();
    FracBodySet bodies_s = [&] {
        StageTimer timer(report, "bodies_fstar");
        return build_frac_bodies(fstar, params, grid, cfg.quad, cfg.threads);
    }();

    const double lhs_sym = volume_form(bodies_f.sym);
    const double rhs_sym = volume_form(bodies_s.sym);
    const double lhs_plus = volume_form(bodies_f.plus);
    const double rhs_plus = volume_form(bodies_s.plus);
    report.add_scalar("volume_form_sym_f", lhs_sym);
    report.add_scalar("volume_form_sym_fstar", rhs_sym);
    report.add_scalar("volume_form_plus_f", lhs_plus);
    report.add_scalar("volume_form_plus_fstar", rhs_plus);
    report.checks.push_back(
        make_check("sym_volume_form_decreases", lhs_sym, ">=", rhs_sym, cfg.tolerance));
    report.checks.push_back(
        make_check("plus_volume_form_decreases", lhs_plus, ">=", rhs_plus, cfg.tolerance));
    report.add_scalar("sym_equality_gap", (lhs_sym - rhs_sym) / rhs_sym);
    report.add_scalar("plus_equality_gap", (lhs_plus - rhs_plus) / rhs_plus);
    return report;
}

Report asym_strengthening_report(const FieldSpec& f, const FracParams& params,
                                 const HarnessConfig& cfg) {
    Report report;
    report.kind = "asym_strengthening";
    report.add_input("field", describe(f));
    report.add_input("params", describe(params));
    if (!f.non_negative())
        throw std::invalid_argument("asym_strengthening_report: field must be non-negative");

    const auto grid = std::make_shared<SphereGrid>(sphere_grid(params.n, cfg.sphere_level));
    FracBodySet bodies = [&] {
        StageTimer timer(report, "bodies");
        return build_frac_bodies(f, params, grid, cfg.quad, cfg.threads);
    }();

    // nodewise gauge^ps additivity == (-ps)-radial sum identity
    double worst = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const double s = std::pow(bodies.sym.gauge[i], params.ps);
        const double pm = std::pow(bodies.plus.gauge[i], params.ps) +
                          std::pow(bodies.minus.gauge[i], params.ps);
        worst = std::max(worst, std::abs(s - pm) / s);
    }
    report.add_scalar("radial_sum_identity_max_rel_error", worst);
    report.checks.push_back(
        make_check("radial_sum_identity_nodewise", worst, "<=", 1e-6, 0.0));

    const StarBody recombined =
        radial_sum(bodies.plus.body, bodies.minus.body, -params.ps);
    double worst_rho = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i)
        worst_rho = std::max(worst_rho,
                             std::abs(recombined.rho[i] - bodies.sym.body.rho[i]) /
                                 bodies.sym.body.rho[i]);
    report.add_scalar("radial_sum_op_max_rel_error", worst_rho);
    report.checks.push_back(
        make_check("radial_sum_op_recovers_sym", worst_rho, "<=", 1e-6, 0.0));

    const double lhs = volume_form(bodies.sym);
    const double rhs = volume_form(bodies.plus) + volume_form(bodies.minus);
    report.add_scalar("volume_form_sym", lhs);
    report.add_scalar("volume_form_plus_plus_minus", rhs);
    report.checks.push_back(
        make_check("dual_bm_strengthening", lhs, ">=", rhs, cfg.tolerance));
    const bool dilates = is_dilate_pair(bodies.plus.body, bodies.minus.body, 1e-3);
    report.add_scalar("plus_minus_dilates", dilates ? 1.0 : 0.0);
    report.add_scalar("strengthening_gap", (lhs - rhs) / lhs);
    if (dilates)
        report.checks.push_back(make_check("dilate_equality", lhs, "~=", rhs, cfg.tolerance));
    return report;
}

Report optimal_body_report(const FieldSpec& f, const FracParams& params,
                           int candidate_count, std::uint64_t seed,
                           const HarnessConfig& cfg) {
    Report report;
    report.kind = "optimal_body";
    report.add_input("field", describe(f));
    report.add_input("params", describe(params));
    report.add_scalar("candidate_count", candidate_count);
    report.add_scalar("seed", static_cast<double>(seed));

    const auto grid = std::make_shared<SphereGrid>(sphere_grid(params.n, cfg.sphere_level));
    const ProjBodyResult proj = [&] {
        StageTimer timer(report, "body");
        return build_frac_body(f, params, grid, BodyVariant::Sym, cfg.quad, cfg.threads);
    }();

    const double omega = omega_n(params.n);
    const StarBody normalized = normalized_to_volume(proj.body, omega);
    const double energy_hat = anisotropic_energy(normalized, proj);
    report.add_scalar("energy_at_normalized_body", energy_hat);

    StageTimer timer(report, "candidates");
    double min_margin = 1e300, max_margin = -1e300, sum_margin = 0.0;
    int violations = 0;
    for (int c = 0; c < candidate_count; ++c) {
        const StarBody cand = normalized_to_volume(
            random_star_body(seed + 1 + static_cast<std::uint64_t>(c), params.n, grid),
            omega);
        const double e = anisotropic_energy(cand, proj);
        const double margin = (e - energy_hat) / energy_hat;
        min_margin = std::min(min_margin, margin);
        max_margin = std::max(max_margin, margin);
        sum_margin += margin;
        if (!(e >= energy_hat)) ++violations;
    }
    report.add_scalar("violations", violations);
    report.add_scalar("min_margin", min_margin);
    report.add_scalar("max_margin", max_margin);
    report.add_scalar("mean_margin", sum_margin / std::max(1, candidate_count));
    report.checks.push_back(make_check("zero_violations",
                                       static_cast<double>(violations), "<=", 0.0, 0.0));
    report.checks.push_back(
        make_check("strict_margin_over_candidates", min_margin, ">=", 0.0, 0.0));
    return report;
}

Report bbm_limit_report(const FieldSpec& f, const StarBody& K, double p,
                        const std::vector<double>& s_list, const HarnessConfig& cfg) {
    Report report;
    report.kind = "bbm_limit";
    report.add_input("field", describe(f));
    if (!f.smooth())
        throw std::domain_error("bbm_limit_report: smooth field required");
    if (!std::is_sorted(s_list.begin(), s_list.end()))
        throw std::invalid_argument("bbm_limit_report: s_list must be increasing");

    const int n = f.dim();
    const auto grid = K.grid;
    const FracProfileSet prof = [&] {
        StageTimer timer(report, "profiles");
        return FracProfileSet(f, p, grid, cfg.quad, cfg.threads);
    }();
    const ClassicalBody classical = [&] {
        StageTimer timer(report, "classical");
        return build_classical_body(f, p, grid, BodyVariant::Sym, cfg.quad.box,
                                    cfg.threads);
    }();
    const double target = n * dual_mixed_volume(K, classical.body, -p);
    const double grad_energy = integrate_box(
        [&](const Vec& x) {
            return std::pow(norm(f.gradient(x)), p);
        },
        cfg.quad.box);
    report.add_scalar("target_general_k", target);
    report.add_scalar("alpha_np_times_grad_energy", alpha_np(n, p) * grad_energy);

    report.table_header = {"s", "scaled_energy", "target", "residual"};
    double prev_residual = 1e300;
    bool decreasing = true;
    double final_residual = 0.0;
    for (double s : s_list) {
        const FracParams params = FracParams::for_limit_sweep(n, s, p);
        const std::vector<double> gauges = prof.gauges(params, BodyVariant::Sym);
        double energy = 0.0;
        for (std::size_t i = 0; i < grid->size(); ++i)
            energy += grid->weights[i] * std::pow(K.rho[i], n + params.ps) *
                      std::pow(gauges[i], params.ps);
        const double scaled = p * (1.0 - s) * energy;
        const double residual = std::abs(scaled - target);
        report.table.push_back({s, scaled, target, residual});
        if (residual >= prev_residual) decreasing = false;
        prev_residual = residual;
        final_residual = residual;
    }
    report.add_scalar("final_residual", final_residual);
    report.add_scalar("final_residual_over_target", final_residual / target);
    report.checks.push_back(make_check("residuals_strictly_decreasing",
                                       decreasing ? 1.0 : 0.0, ">=", 1.0, 0.0));
    return report;
}

Report riesz_report(const FieldSpec& f, const FieldSpec& k, const FieldSpec& g,
                    const HarnessConfig& cfg, int points_per_axis,
                    double half_extent) {
    Report report;
    report.kind = "riesz_rearrangement";
    report.add_input("f", describe(f));
    report.add_input("k", describe(k));
    report.add_input("g", describe(g));
    const BoxQuad measure_box =
        default_measure_box(f.dim(), half_extent - 0.5, cfg.measure_points);
    StageTimer timer(report, "gap");
    const GapResult gap = riesz_gap(f, k, g, points_per_axis, half_extent,
                                    measure_box, cfg.rearrange_levels, cfg.threads);
    report.add_scalar("lhs", gap.lhs);
    report.add_scalar("rhs", gap.rhs);
    report.add_scalar("relative_gap", (gap.rhs - gap.lhs) / std::max(gap.rhs, 1e-300));
    report.checks.push_back(
        make_check("symmetrization_does_not_decrease", gap.lhs, "<=", gap.rhs,
                   cfg.tolerance));
    return report;
}

Report polya_szego_report(const FieldSpec& f, const StarBody& K,
                          const FracParams& params, BodyVariant variant,
                          const HarnessConfig& cfg) {
    Report report;
    report.kind = "anisotropic_polya_szego";
    report.add_input("field", describe(f));
    report.add_input("params", describe(params));
    report.add_input("variant", to_string(variant));
    const BoxQuad measure_box =
        default_measure_box(params.n, f.effective_radius(), cfg.measure_points);
    StageTimer timer(report, "gap");
    const GapResult gap = polya_szego_gap(f, K, params, variant, cfg.quad,
                                          measure_box, cfg.rearrange_levels,
                                          cfg.threads);
    report.add_scalar("lhs_energy", gap.lhs);
    report.add_scalar("rhs_energy_symmetrized", gap.rhs);
    report.add_scalar("relative_gap", (gap.lhs - gap.rhs) / std::max(gap.lhs, 1e-300));
    report.checks.push_back(make_check("symmetrization_does_not_increase_energy",
                                       gap.lhs, ">=", gap.rhs, cfg.tolerance));
    return report;
}

}  // namespace fracbody
