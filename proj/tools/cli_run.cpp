#include "cli_run.hpp"

#include "fracbody/constants.hpp"
#include "fracbody/report_io.hpp"
#include "fracbody/rng.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace fracbody::cli {

namespace {

double fields_radius(const RunConfig& cfg) {
    double r = 1.0;
    for (const auto& f : cfg.fields) r = std::max(r, f.effective_radius());
    return r;
}

HarnessConfig make_harness(const RunConfig& cfg) {
    HarnessConfig h;
    h.sphere_level = cfg.sphere_level;
    h.tolerance = cfg.tolerance;
    h.threads = cfg.threads;
    h.rearrange_levels = cfg.rearrange_levels;
    h.measure_points = cfg.measure_points;
    h.oracle_points = cfg.oracle_points;

    const double L =
        cfg.box_half_extent > 0.0 ? cfg.box_half_extent : fields_radius(cfg) + 0.5;
    int points = cfg.box_points;
    if (points <= 0) points = cfg.n == 1 ? 2000 : (cfg.n == 2 ? 64 : 24);
    h.quad.box = BoxQuad::make(cfg.n, L, points);
    h.quad.tgrid.t_min = cfg.t_min;
    h.quad.tgrid.t_max = cfg.t_max;
    h.quad.tgrid.points = cfg.t_points;
    return h;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void print_summary(const Report& report) {
    for (const auto& c : report.checks) {
        if (!c.asserted) continue;
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << report.kind << "/" << c.name
                  << ": " << c.lhs << " " << c.relation << " " << c.rhs
                  << " (tol " << c.tolerance << ", margin " << c.margin << ")\n";
    }
}

BodyVariant variant_from_string(const std::string& name) {
    if (name == "plus") return BodyVariant::Plus;
    if (name == "minus") return BodyVariant::Minus;
    return BodyVariant::Sym;
}

Report projbody_report(const FieldSpec& f, const FracParams& params,
                       const RunConfig& cfg, const HarnessConfig& h,
                       ProjBodyResult& body_out) {
    Report report;
    report.kind = "projbody";
    report.add_input("params", "n=" + std::to_string(params.n));
    const auto grid = std::make_shared<SphereGrid>(sphere_grid(params.n, h.sphere_level));
    FracBodySet set = build_frac_bodies(f, params, grid, h.quad, h.threads);
    const ProjBodyResult& chosen = set.get(variant_from_string(cfg.variant));

    double sym_asym = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const double a = set.sym.gauge[i];
        const double b = set.sym.gauge[grid->mate[i]];
        sym_asym = std::max(sym_asym, std::abs(a - b) / a);
    }
    report.add_scalar("volume", volume(chosen.body));
    report.add_scalar("gauge_min", *std::min_element(chosen.gauge.begin(), chosen.gauge.end()));
    report.add_scalar("gauge_max", *std::max_element(chosen.gauge.begin(), chosen.gauge.end()));
    report.checks.push_back(
        make_check("sym_gauge_antipodal", sym_asym, "<=", 1e-8, 0.0));
    report.timings.emplace_back("body", chosen.elapsed_seconds);
    body_out = chosen;
    return report;
}

Report riesz_suite_report(const RunConfig& cfg, const HarnessConfig& h) {
    if (cfg.n > 2) throw std::domain_error("riesz command supports n <= 2 only");
    Report report;
    report.kind = "riesz_suite";
    const int triples = std::min(cfg.candidates, 200);
    report.add_scalar("triples", triples);
    report.add_scalar("seed", static_cast<double>(cfg.seed));
    report.table_header = {"index", "lhs", "rhs", "relative_gap", "pass"};

    Rng rng(cfg.seed);
    const double L = 4.0;
    const int m = cfg.oracle_points > 0 ? cfg.oracle_points : (cfg.n == 1 ? 2000 : 96);
    const BoxQuad measure_box = default_measure_box(cfg.n, L - 0.5, h.measure_points);
    bool all = true;
    for (int k = 0; k < triples; ++k) {
        auto rand_ball = [&](double rlo, double rhi, double spread) {
            Vec c = vec_zero();
            for (int d = 0; d < cfg.n; ++d) c[d] = rng.uniform(-spread, spread);
            return FieldSpec::ball_indicator(cfg.n, rng.uniform(rlo, rhi), c);
        };
        const FieldSpec f = rand_ball(0.4, 1.1, 1.2);
        const FieldSpec kk = rand_ball(0.4, 1.1, 1.2);
        const FieldSpec g = rand_ball(0.4, 1.1, 1.2);
        const GapResult gap =
            riesz_gap(f, kk, g, m, L, measure_box, h.rearrange_levels, h.threads);
        const bool pass = gap.lhs <= gap.rhs + h.tolerance * gap.rhs;
        all = all && pass;
        report.table.push_back({static_cast<double>(k), gap.lhs, gap.rhs,
                                (gap.rhs - gap.lhs) / gap.rhs, pass ? 1.0 : 0.0});
    }
    report.checks.push_back(
        make_check("all_triples_satisfy_inequality", all ? 1.0 : 0.0, ">=", 1.0, 0.0));
    return report;
}

}  // namespace

Report selftest_report(const RunConfig& cfg) {
    Report report;
    report.kind = "selftest";
    const double pi = std::numbers::pi;

    // closed-form t-integrals
    {
        TGrid grid;
        grid.t_min = 1e-4;
        grid.t_max = 1e4;
        grid.points = 200;
        grid.low_exponent = -0.5;
        grid.tail_coeff = 2.0;
        const FracParams params = validate_params(1, 0.25, 2.0);  // ps = 0.5
        const double v8 = t_integral(
            [](double t) { return 2.0 * std::min(t, 1.0); }, params, grid);
        report.checks.push_back(make_check("t_integral_kinked_profile", v8, "~=", 8.0, 1e-4));

        grid.low_exponent = 0.5;  // p - ps - 1 for the smooth-order profile
        grid.tail_coeff = 1.0;
        const double v83 = t_integral(
            [](double t) {
                const double m = std::min(t, 1.0);
                return m * m;
            },
            params, grid);
        report.checks.push_back(
            make_check("t_integral_smooth_profile", v83, "~=", 8.0 / 3.0, 1e-4));

        grid.tail_coeff = 0.0;
        const double v0 =
            t_integral([](double) { return 0.0; }, params, grid);
        report.checks.push_back(make_check("t_integral_zero", std::abs(v0), "<=", 1e-12, 0.0));
    }

    // unit-ball volumes and sphere moments
    report.checks.push_back(make_check("omega_1", omega_n(1), "~=", 2.0, 1e-12));
    report.checks.push_back(make_check("omega_2", omega_n(2), "~=", pi, 1e-12));
    report.checks.push_back(make_check("omega_3", omega_n(3), "~=", 4.0 * pi / 3.0, 1e-12));
    report.checks.push_back(make_check("alpha_1p", alpha_np(1, 3.7), "~=", 2.0, 1e-14));
    report.checks.push_back(make_check("alpha_22", alpha_np(2, 2.0), "~=", pi, 1e-10));
    report.checks.push_back(
        make_check("alpha_32", alpha_np(3, 2.0), "~=", 4.0 * pi / 3.0, 1e-8));

    {
        auto g2 = std::make_shared<SphereGrid>(sphere_grid(2, 24));
        auto g3 = std::make_shared<SphereGrid>(sphere_grid(3, 8));
        report.checks.push_back(
            make_check("ball_volume_2d", volume(ball_body(g2)), "~=", pi, 1e-10));
        report.checks.push_back(make_check("ball_volume_3d", volume(ball_body(g3)), "~=",
                                           4.0 * pi / 3.0, 1e-8));
    }

    // 1-D indicator gauge, closed form 8^(1/ps) = 64
    {
        const FracParams params = validate_params(1, 0.25, 2.0);
        ProjQuad quad;
        quad.box = BoxQuad::make(1, 2.0, 2000);
        quad.tgrid.t_min = 1e-3;
        quad.tgrid.t_max = 100.0;
        quad.tgrid.points = 160;
        const FieldSpec f = FieldSpec::ball_indicator(1, 0.5, Vec{0.5, 0.0, 0.0});
        const double gauge = frac_gauge(f, Vec{1.0, 0.0, 0.0}, params, quad);
        report.checks.push_back(make_check("indicator_gauge_1d", gauge, "~=", 64.0, 0.005));
    }

    (void)cfg;
    return report;
}

int run(const RunConfig& cfg) {
    namespace fs = std::filesystem;
    const fs::path out_dir(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (!fs::is_directory(out_dir))
        throw std::runtime_error("output directory '" + cfg.out_dir + "' is not writable");

    const HarnessConfig h = make_harness(cfg);
    std::vector<Report> reports;
    std::vector<std::pair<std::string, std::string>> extra_artifacts;

    if (cfg.command == "selftest") {
        reports.push_back(selftest_report(cfg));
    } else if (cfg.command == "riesz") {
        reports.push_back(riesz_suite_report(cfg, h));
    } else {
        for (std::size_t i = 0; i < cfg.fields.size(); ++i) {
            const FieldSpec& f = cfg.fields[i];
            if (cfg.command == "limits") {
                const auto grid =
                    std::make_shared<SphereGrid>(sphere_grid(cfg.n, cfg.sphere_level));
                const StarBody unit = ball_body(grid);
                reports.push_back(bbm_limit_report(f, unit, cfg.p, cfg.s_list, h));
                continue;
            }
            const FracParams params = validate_params(cfg.n, cfg.s, cfg.p);
            if (cfg.command == "chain") {
                reports.push_back(sobolev_chain_report(f, params, h));
            } else if (cfg.command == "ps") {
                reports.push_back(affine_ps_report(f, params, h));
            } else if (cfg.command == "asym") {
                reports.push_back(asym_strengthening_report(f, params, h));
            } else if (cfg.command == "optimal") {
                reports.push_back(
                    optimal_body_report(f, params, cfg.candidates, cfg.seed, h));
            } else if (cfg.command == "projbody") {
                ProjBodyResult body{StarBody(std::make_shared<SphereGrid>(sphere_grid(cfg.n, 1)),
                                             std::vector<double>(sphere_grid(cfg.n, 1).size(), 1.0)),
                                    {}, params, BodyVariant::Sym, h.quad.tgrid, 0, 0, 0, {}};
                reports.push_back(projbody_report(f, params, cfg, h, body));
                const std::string suffix = cfg.fields.size() > 1 ? "-" + std::to_string(i) : "";
                extra_artifacts.emplace_back(cfg.artifact_stem() + suffix + "-body.json",
                                             star_body_to_json(body.body));
                extra_artifacts.emplace_back(cfg.artifact_stem() + suffix + "-body.csv",
                                             proj_body_to_csv(body));
            } else {
                throw std::invalid_argument("unhandled command '" + cfg.command + "'");
            }
        }
    }

    // artifacts
    const std::string stem = cfg.artifact_stem();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const std::string suffix = reports.size() > 1 ? "-" + std::to_string(i) : "";
        if (cfg.json_out)
            write_file(out_dir / (stem + suffix + ".json"), report_to_json(reports[i]));
        if (cfg.csv_out)
            write_file(out_dir / (stem + suffix + ".csv"), report_to_csv(reports[i]));
        write_file(out_dir / (stem + suffix + ".meta.json"),
                   report_meta_to_json(reports[i]));
    }
    for (const auto& [name, content] : extra_artifacts)
        write_file(out_dir / name, content);

    bool all = true;
    for (const auto& r : reports) {
        print_summary(r);
        all = all && r.all_pass();
    }
    std::cout << (all ? "OK" : "FAILED") << ": " << reports.size() << " report(s), "
              << stem << "\n";
    return all ? 0 : 1;
}

}  // namespace fracbody::cli
