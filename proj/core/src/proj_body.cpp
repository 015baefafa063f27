#include "fracbody/proj_body.hpp"

#include "fracbody/constants.hpp"
#include "fracbody/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracbody {

std::string to_string(BodyVariant v) {
    switch (v) {
        case BodyVariant::Sym: return "sym";
        case BodyVariant::Plus: return "plus";
        case BodyVariant::Minus: return "minus";
    }
    throw std::logic_error("unknown BodyVariant");
}

double small_shift_order(const FieldSpec& f, double p) {
    for (const auto& t : f.terms())
        if (t.kind == FieldKind::BallIndicator) return 1.0;
    return p;
}

namespace {

void require_nonzero(const FieldSpec& f) {
    if (f.sup_bound() == 0.0)
        throw std::domain_error("zero field: polar projection body gauge undefined");
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

FracProfileSet::FracProfileSet(FieldSpec f, double p,
                               std::shared_ptr<const SphereGrid> grid,
                               const ProjQuad& quad, int threads,
                               bool absolute_value)
    : f_(std::move(f)), p_(p), grid_(std::move(grid)), quad_(quad) {
    require_nonzero(f_);
    if (f_.dim() != grid_->n)
        throw std::invalid_argument("FracProfileSet: field/grid dimension mismatch");
    small_shift_order_ = small_shift_order(f_, p_);

    // indicator shift profiles are slivers of width ~t; below a few node
    // spacings the box rule cannot see them, so the window is floored there
    // and the exact-linear head model covers the rest (profiles of
    // indicators are exactly linear below the feature scale)
    if (small_shift_order_ == 1.0) {
        const double spacing =
            std::numbers::pi * quad_.box.half_extent / quad_.box.points_per_axis;
        quad_.tgrid.t_min = std::max(quad_.tgrid.t_min, 25.0 * spacing);
    }

    // probe integrator only for the t sample locations (ps-independent)
    TGrid probe = quad_.tgrid;
    probe.low_exponent = 0.0;
    ts_ = TIntegrator(probe, 1.0).eval_points();

    for (std::size_t i = 0; i < grid_->size(); ++i) {
        const std::size_t j = grid_->mate[i];
        if (i < j) {
            pair_a_.push_back(i);
            pair_b_.push_back(j);
        }
    }
    prof_plus_.assign(pair_a_.size(), {});
    prof_minus_.assign(pair_a_.size(), {});
    pair_seconds_.assign(pair_a_.size(), 0.0);

    const ShiftEnergyEngine engine(f_, quad_.box, p_, absolute_value);
    const double t0 = now_seconds();
    parallel_for(pair_a_.size(), [&](std::size_t k) {
        const double tk0 = now_seconds();
        const Vec xi = grid_->nodes[pair_a_[k]];
        std::vector<double>& sp = prof_plus_[k];
        std::vector<double>& sm = prof_minus_[k];
        sp.resize(ts_.size());
        sm.resize(ts_.size());
        for (std::size_t q = 0; q < ts_.size(); ++q) {
            const Vec z = ts_[q] * xi;
            const SignedNorms a = engine.signed_energy(z);
            const SignedNorms b = engine.signed_energy(-z);
            // two quadrature routes to the same exact quantity, averaged
            sp[q] = 0.5 * (a.plus + b.minus);
            sm[q] = 0.5 * (a.minus + b.plus);
        }
        pair_seconds_[k] = now_seconds() - tk0;
    }, threads);
    elapsed_seconds_ = now_seconds() - t0;
}

void FracProfileSet::gauges_for(const FracParams& params, std::vector<double>& gp,
                                std::vector<double>& gm,
                                std::vector<double>& gs) const {
    if (params.p != p_)
        throw std::invalid_argument("FracProfileSet: exponent p differs from profile p");
    if (params.n != grid_->n)
        throw std::invalid_argument("FracProfileSet: dimension mismatch");
    const double low_exponent = small_shift_order_ - params.ps - 1.0;
    if (!(low_exponent > -1.0))
        throw std::domain_error(
            "shift-energy integrand not integrable at 0 (indicator fields need ps < 1)");

    TGrid tg = quad_.tgrid;
    tg.low_exponent = low_exponent;
    const TIntegrator integ(tg, params.ps);
    if (integ.eval_points().size() != ts_.size())
        throw std::logic_error("FracProfileSet: t sample mismatch");

    const std::size_t count = grid_->size();
    gp.assign(count, 0.0);
    gm.assign(count, 0.0);
    gs.assign(count, 0.0);
    const double inv_ps = 1.0 / params.ps;
    std::vector<double> ssum(ts_.size());
    for (std::size_t k = 0; k < pair_a_.size(); ++k) {
        const auto& sp = prof_plus_[k];
        const auto& sm = prof_minus_[k];
        for (std::size_t q = 0; q < ts_.size(); ++q) ssum[q] = sp[q] + sm[q];
        const double tp = integ.tail_average(sp);
        const double tm = integ.tail_average(sm);
        const double Gp = integ.integrate(sp, tp, low_exponent);
        const double Gm = integ.integrate(sm, tm, low_exponent);
        const double Gs = integ.integrate(ssum, tp + tm, low_exponent);
        if (!(Gp > 0.0) || !(Gm > 0.0) || !(Gs > 0.0) || !std::isfinite(Gp) ||
            !std::isfinite(Gm) || !std::isfinite(Gs))
            throw std::domain_error("degenerate gauge: shift energy vanished");
        const std::size_t i = pair_a_[k], j = pair_b_[k];
        gp[i] = std::pow(Gp, inv_ps);
        gm[i] = std::pow(Gm, inv_ps);
        gp[j] = gm[i];  // gauge_plus(-xi) = gauge_minus(xi), exactly
        gm[j] = gp[i];
        gs[i] = gs[j] = std::pow(Gs, inv_ps);
    }
}

std::vector<double> FracProfileSet::gauges(const FracParams& params,
                                           BodyVariant v) const {
    std::vector<double> gp, gm, gs;
    gauges_for(params, gp, gm, gs);
    switch (v) {
        case BodyVariant::Plus: return gp;
        case BodyVariant::Minus: return gm;
        default: return gs;
    }
}

FracBodySet FracProfileSet::bodies(const FracParams& params) const {
    std::vector<double> gp, gm, gs;
    gauges_for(params, gp, gm, gs);

    auto assemble = [&](std::vector<double> gauge, BodyVariant v) {
        std::vector<double> rho(gauge.size());
        for (std::size_t i = 0; i < gauge.size(); ++i) rho[i] = 1.0 / gauge[i];
        ProjBodyResult r{StarBody(grid_, std::move(rho)), std::move(gauge), params,
                         v, quad_.tgrid, quad_.box.half_extent,
                         quad_.box.points_per_axis, elapsed_seconds_, {}};
        r.node_seconds.assign(grid_->size(), 0.0);
        for (std::size_t k = 0; k < pair_a_.size(); ++k) {
            r.node_seconds[pair_a_[k]] = pair_seconds_[k];
            r.node_seconds[pair_b_[k]] = pair_seconds_[k];
        }
        return r;
    };
    FracBodySet set{assemble(std::move(gs), BodyVariant::Sym),
                    assemble(std::move(gp), BodyVariant::Plus),
                    assemble(std::move(gm), BodyVariant::Minus)};
    return set;
}

FracBodySet build_frac_bodies(const FieldSpec& f, const FracParams& params,
                              std::shared_ptr<const SphereGrid> grid,
                              const ProjQuad& quad, int threads) {
    return FracProfileSet(f, params.p, std::move(grid), quad, threads).bodies(params);
}

ProjBodyResult build_frac_body(const FieldSpec& f, const FracParams& params,
                               std::shared_ptr<const SphereGrid> grid,
                               BodyVariant variant, const ProjQuad& quad,
                               int threads) {
    FracBodySet set = build_frac_bodies(f, params, std::move(grid), quad, threads);
    switch (variant) {
        case BodyVariant::Plus: return std::move(set.plus);
        case BodyVariant::Minus: return std::move(set.minus);
        default: return std::move(set.sym);
    }
}

namespace {

/// Two-node grid along +-xi; reuses the pair machinery for single directions.
std::shared_ptr<const SphereGrid> direction_grid(int n, const Vec& xi) {
    auto g = std::make_shared<SphereGrid>();
    g->n = n;
    g->level = 0;
    const Vec u = normalized(xi);
    g->nodes = {u, -u};
    const double half_area = 0.5 * sphere_area(n);
    g->weights = {half_area, half_area};
    g->mate = {1, 0};
    return g;
}

}  // namespace

double frac_gauge(const FieldSpec& f, const Vec& xi, const FracParams& params,
                  const ProjQuad& quad) {
    const auto grid = direction_grid(f.dim(), xi);
    FracProfileSet prof(f, params.p, grid, quad);
    return prof.gauges(params, BodyVariant::Sym)[0];
}

double frac_gauge_signed(const FieldSpec& f, const Vec& xi, const FracParams& params,
                         int sign, const ProjQuad& quad) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("frac_gauge_signed: sign must be +1 or -1");
    const auto grid = direction_grid(f.dim(), xi);
    FracProfileSet prof(f, params.p, grid, quad);
    return prof.gauges(params, sign > 0 ? BodyVariant::Plus : BodyVariant::Minus)[0];
}

double classical_gauge(const FieldSpec& f, const Vec& xi, double p,
                       BodyVariant variant, const BoxQuad& box) {
    if (!f.smooth())
        throw std::domain_error("classical gauge needs a smooth field (analytic gradient)");
    require_nonzero(f);
    double qp = 0.0, qm = 0.0;
    const std::size_t count = box.size();
    for (std::size_t i = 0; i < count; ++i) {
        const double d = dot(f.gradient(box.node(i)), xi);
        const double w = box.weight(i);
        if (d > 0.0)
            qp += w * std::pow(d, p);
        else if (d < 0.0)
            qm += w * std::pow(-d, p);
    }
    switch (variant) {
        case BodyVariant::Plus: return std::pow(qp, 1.0 / p);
        case BodyVariant::Minus: return std::pow(qm, 1.0 / p);
        default: return std::pow(qp + qm, 1.0 / p);
    }
}

ClassicalBody build_classical_body(const FieldSpec& f, double p,
                                   std::shared_ptr<const SphereGrid> grid,
                                   BodyVariant variant, const BoxQuad& box,
                                   int threads) {
    if (!f.smooth())
        throw std::domain_error("classical body needs a smooth field (analytic gradient)");
    require_nonzero(f);
    if (f.dim() != grid->n)
        throw std::invalid_argument("build_classical_body: dimension mismatch");

    // cache gradients once; each direction is then a weighted reduction
    const std::size_t count = box.size();
    std::vector<Vec> grads(count);
    std::vector<double> ws(count);
    for (std::size_t i = 0; i < count; ++i) {
        grads[i] = f.gradient(box.node(i));
        ws[i] = box.weight(i);
    }

    std::vector<std::size_t> pa, pb;
    for (std::size_t i = 0; i < grid->size(); ++i)
        if (i < grid->mate[i]) {
            pa.push_back(i);
            pb.push_back(grid->mate[i]);
        }

    std::vector<double> gauge_plus(grid->size(), 0.0), gauge_minus(grid->size(), 0.0),
        gauge_sym(grid->size(), 0.0);
    parallel_for(pa.size(), [&](std::size_t k) {
        const Vec xi = grid->nodes[pa[k]];
        double qp = 0.0, qm = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            const double d = dot(grads[i], xi);
            if (d > 0.0)
                qp += ws[i] * std::pow(d, p);
            else if (d < 0.0)
                qm += ws[i] * std::pow(-d, p);
        }
        const double gp = std::pow(qp, 1.0 / p);
        const double gm = std::pow(qm, 1.0 / p);
        const double gsym = std::pow(qp + qm, 1.0 / p);
        gauge_plus[pa[k]] = gp;
        gauge_plus[pb[k]] = gm;  // <grad f, -xi>_+ = <grad f, xi>_-
        gauge_minus[pa[k]] = gm;
        gauge_minus[pb[k]] = gp;
        gauge_sym[pa[k]] = gauge_sym[pb[k]] = gsym;
    }, threads);

    std::vector<double>* chosen = &gauge_sym;
    if (variant == BodyVariant::Plus) chosen = &gauge_plus;
    if (variant == BodyVariant::Minus) chosen = &gauge_minus;
    for (double g : *chosen)
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::domain_error("degenerate classical gauge");
    std::vector<double> rho(chosen->size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = 1.0 / (*chosen)[i];
    return ClassicalBody{StarBody(std::move(grid), std::move(rho)), *chosen, p, variant};
}

double anisotropic_energy(const StarBody& K, const ProjBodyResult& proj) {
    const int n = K.dim();
    return n * dual_mixed_volume(K, proj.body, -proj.params.ps);
}

double anisotropic_energy(const FieldSpec& f, const StarBody& K,
                          const FracParams& params, BodyVariant variant,
                          const ProjQuad& quad, int threads) {
    const ProjBodyResult proj = build_frac_body(f, params, K.grid, variant, quad, threads);
    return anisotropic_energy(K, proj);
}

namespace {

/// Exit radius of the ray x + r xi from the box [-L, L]^n.
double box_exit_radius(const Vec& x, const Vec& xi, double L, int n) {
    double r = 1e300;
    for (int d = 0; d < n; ++d) {
        if (xi[d] > 1e-14)
            r = std::min(r, (L - x[d]) / xi[d]);
        else if (xi[d] < -1e-14)
            r = std::min(r, (-L - x[d]) / xi[d]);
    }
    return r;
}

/// Integral of gauge_K(w)^-(n+ps) over the complement of (box - x): by
/// homogeneity each half-line contributes rho^(n+ps) r_exit^-ps / ps.
double kernel_complement(const StarBody& K, const Vec& x, double L, double ps) {
    const SphereGrid& g = *K.grid;
    const int n = K.dim();
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double r = box_exit_radius(x, g.nodes[i], L, n);
        sum += g.weights[i] * std::pow(K.rho[i], n + ps) * std::pow(r, -ps);
    }
    return sum / ps;
}

}  // namespace

double direct_double_energy(const FieldSpec& f, const StarBody& K,
                            const FracParams& params, int points_per_axis,
                            double half_extent, int threads) {
    const int n = f.dim();
    if (n > 2)
        throw std::domain_error("direct_double_energy: oracle limited to n <= 2");
    if (K.dim() != n)
        throw std::invalid_argument("direct_double_energy: body dimension mismatch");
    const int m = points_per_axis;
    if (m < 4) throw std::invalid_argument("direct_double_energy: grid too small");
    const double L = half_extent > 0.0 ? half_extent : f.effective_radius() + 0.5;
    const double h = 2.0 * L / m;
    const double p = params.p;
    const double kernel_pow = n + params.ps;

    // uniform midpoint grids; the y grid is offset by half a cell so the
    // diagonal x = y is never sampled
    std::vector<double> xs(m), ys(m);
    for (int i = 0; i < m; ++i) {
        xs[i] = -L + (i + 0.5) * h;
        ys[i] = xs[i] + 0.5 * h;
    }

    if (n == 1) {
        std::vector<double> fx(m), fy(m);
        for (int i = 0; i < m; ++i) {
            fx[i] = f.eval(Vec{xs[i], 0.0, 0.0});
            fy[i] = f.eval(Vec{ys[i], 0.0, 0.0});
        }
        // kernel by index difference: z = (i - j) h - h/2, never zero
        std::vector<double> kernel(2 * m - 1);
        for (int d = -(m - 1); d <= m - 1; ++d) {
            const Vec z{d * h - 0.5 * h, 0.0, 0.0};
            kernel[d + m - 1] = std::pow(gauge_eval(K, z), -kernel_pow);
        }
        double sum = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const double diff = std::abs(fx[i] - fy[j]);
                if (diff == 0.0) continue;
                sum += std::pow(diff, p) * kernel[i - j + m - 1];
            }
        // far-field completion: the partner point lies outside the box where
        // f vanishes, so the inner integral is exact by homogeneity
        double tail = 0.0;
        for (int i = 0; i < m; ++i) {
            if (fx[i] != 0.0)
                tail += std::pow(std::abs(fx[i]), p) *
                        kernel_complement(K, Vec{-xs[i], 0.0, 0.0}, L, params.ps);
            if (fy[i] != 0.0)
                tail += std::pow(std::abs(fy[i]), p) *
                        kernel_complement(K, Vec{ys[i], 0.0, 0.0}, L, params.ps);
        }
        return sum * h * h + tail * h;
    }

    // n == 2
    std::vector<double> fx(static_cast<std::size_t>(m) * m),
        fy(static_cast<std::size_t>(m) * m);
    for (int b = 0; b < m; ++b)
        for (int a = 0; a < m; ++a) {
            fx[static_cast<std::size_t>(b) * m + a] = f.eval(Vec{xs[a], xs[b], 0.0});
            fy[static_cast<std::size_t>(b) * m + a] = f.eval(Vec{ys[a], ys[b], 0.0});
        }
    const int kd = 2 * m - 1;
    std::vector<double> kernel(static_cast<std::size_t>(kd) * kd);
    for (int db = -(m - 1); db <= m - 1; ++db)
        for (int da = -(m - 1); da <= m - 1; ++da) {
            const Vec z{da * h - 0.5 * h, db * h - 0.5 * h, 0.0};
            kernel[static_cast<std::size_t>(db + m - 1) * kd + (da + m - 1)] =
                std::pow(gauge_eval(K, z), -kernel_pow);
        }

    const bool p_is_two = p == 2.0;
    std::vector<double> partial(static_cast<std::size_t>(m), 0.0);
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t ib) {
        double sum = 0.0;
        for (int ia = 0; ia < m; ++ia) {
            const double fxv = fx[ib * m + ia];
            for (int jb = 0; jb < m; ++jb) {
                const double* krow =
                    &kernel[static_cast<std::size_t>(static_cast<int>(ib) - jb + m - 1) * kd +
                            (ia + m - 1)];
                const double* fyrow = &fy[static_cast<std::size_t>(jb) * m];
                if (p_is_two) {
                    for (int ja = 0; ja < m; ++ja) {
                        const double diff = fxv - fyrow[ja];
                        sum += diff * diff * krow[-ja];
                    }
                } else {
                    for (int ja = 0; ja < m; ++ja) {
                        const double diff = std::abs(fxv - fyrow[ja]);
                        if (diff != 0.0) sum += std::pow(diff, p) * krow[-ja];
                    }
                }
            }
        }
        partial[ib] = sum;
    }, threads);
    double total = 0.0;
    for (double s : partial) total += s;

    double tail = 0.0;
    for (int b = 0; b < m; ++b)
        for (int a = 0; a < m; ++a) {
            const double vx = fx[static_cast<std::size_t>(b) * m + a];
            if (vx != 0.0)
                tail += std::pow(std::abs(vx), p) *
                        kernel_complement(K, Vec{-xs[a], -xs[b], 0.0}, L, params.ps);
            const double vy = fy[static_cast<std::size_t>(b) * m + a];
            if (vy != 0.0)
                tail += std::pow(std::abs(vy), p) *
                        kernel_complement(K, Vec{ys[a], ys[b], 0.0}, L, params.ps);
        }
    return total * h * h * h * h + tail * h * h;
}

std::vector<LimitScalingRow> limit_scaling_rows(const FieldSpec& f, const Vec& xi,
                                                double p,
                                                const std::vector<double>& s_list,
                                                const ProjQuad& quad) {
    if (!f.smooth())
        throw std::domain_error("limit scaling needs a smooth field");
    const auto grid = direction_grid(f.dim(), xi);
    const FracProfileSet prof(f, p, grid, quad);
    const double classical = classical_gauge(f, normalized(xi), p, BodyVariant::Sym, quad.box);
    std::vector<LimitScalingRow> rows;
    rows.reserve(s_list.size());
    for (double s : s_list) {
        const FracParams params = FracParams::for_limit_sweep(f.dim(), s, p);
        const double g = prof.gauges(params, BodyVariant::Sym)[0];
        LimitScalingRow row;
        row.s = s;
        row.scaled_gauge = std::pow(p * (1.0 - s), 1.0 / p) * g;
        row.classical = classical;
        row.residual = std::abs(row.scaled_gauge - classical);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace fracbody
