#include "fracbody/rearrange.hpp"

#include "fracbody/constants.hpp"
#include "fracbody/gauss_legendre.hpp"
#include "fracbody/monotone_cubic.hpp"
#include "fracbody/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracbody {

double RadialProfile::value_at(double r) const {
    if (radii.empty()) return 0.0;
    if (r <= radii.front()) return values.front();
    if (r >= radii.back()) return 0.0;
    std::vector<double> u(radii.size());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = radii[k] * radii[k];
    return MonotoneCubic(u, values).eval(r * r);
}

double RadialProfile::level_measure(double t) const {
    if (radii.empty() || t > values.front()) return 0.0;
    if (t <= values.back()) return omega_n(n) * std::pow(radii.back(), n);
    // values decrease along the knots; find the crossing segment
    std::size_t k = 1;
    while (k < values.size() && values[k] >= t) ++k;
    const double w = (values[k - 1] - t) / (values[k - 1] - values[k]);
    const double u0 = radii[k - 1] * radii[k - 1];
    const double u1 = radii[k] * radii[k];
    const double r = std::sqrt(u0 + w * (u1 - u0));
    return omega_n(n) * std::pow(r, n);
}

double RadialProfile::norm_pow(double p) const {
    // piecewise: n omega_n int v(r)^p r^(n-1) dr, 8-point rule per segment
    std::vector<double> u(radii.size());
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = radii[k] * radii[k];
    const MonotoneCubic interp(u, values);
    const GaussLegendre& ref = gauss_legendre(8);
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < radii.size(); ++k) {
        const double a = radii[k], b = radii[k + 1];
        if (!(b > a)) continue;
        const double mid = 0.5 * (a + b), rad = 0.5 * (b - a);
        for (int q = 0; q < 8; ++q) {
            const double r = mid + rad * ref.nodes[q];
            const double v = interp.eval(r * r);
            sum += rad * ref.weights[q] * std::pow(v, p) * std::pow(r, n - 1);
        }
    }
    return n * omega_n(n) * sum;
}

FieldSpec RadialProfile::to_field() const {
    return FieldSpec::radial_profile(n, radii, values);
}

double superlevel_measure(const FieldSpec& f, double t, const BoxQuad& q) {
    if (!(t > 0.0))
        throw std::invalid_argument("superlevel_measure: threshold must be > 0");
    return integrate_box(
        [&](const Vec& x) { return f.eval(x) >= t ? 1.0 : 0.0; }, q);
}

RadialProfile schwarz_rearrange(const FieldSpec& f, int level_count, const BoxQuad& q) {
    if (!f.non_negative())
        throw std::invalid_argument("schwarz_rearrange: field must be non-negative");
    if (level_count < 4)
        throw std::invalid_argument("schwarz_rearrange: need at least 4 levels");
    const int n = f.dim();

    // one field pass; sorting the sampled values makes every super-level
    // measure a suffix weight sum, so thousands of thresholds cost nothing.
    // The sampled sup is never above the true sup, so no threshold lands in
    // an empty range above the peak.
    const std::size_t count = q.size();
    std::vector<std::pair<double, double>> samples(count);  // (value, weight)
    for (std::size_t i = 0; i < count; ++i)
        samples[i] = {f.eval(q.node(i)), q.weight(i)};
    std::sort(samples.begin(), samples.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    const double sup = samples.front().first;
    if (!(sup > 0.0)) throw std::domain_error("schwarz_rearrange: zero field");
    std::vector<double> wsum(count + 1, 0.0), wvsum(count + 1, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
        wsum[i + 1] = wsum[i] + samples[i].second;
        wvsum[i + 1] = wvsum[i] + samples[i].second * samples[i].first;
    }
    auto rank_of = [&](double t) {  // number of samples with value >= t
        std::size_t lo = 0, hi = count;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (samples[mid].first >= t)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    };
    // exact average of the super-level measure over the value window [a, b].
    // Point lookups would inherit the lumps the tensor grid produces where
    // a level circle runs tangent to a grid row; the window average is what
    // keeps the profile slopes (and with them small-shift energies of the
    // profile field) noise-free.
    auto measure_avg = [&](double a, double b) {
        const std::size_t kb = rank_of(b), ka = rank_of(a);
        const double full = wsum[kb] * (b - a);
        const double partial = (wvsum[ka] - wvsum[kb]) - a * (wsum[ka] - wsum[kb]);
        return (full + partial) / (b - a);
    };

    const double omega = omega_n(n);
    const double ratio = 1e-4;
    const double step = std::pow(ratio, 1.0 / (level_count - 1));
    const double half = std::sqrt(step);  // adjacent windows tile the t axis

    RadialProfile prof;
    prof.n = n;
    prof.radii.push_back(0.0);
    prof.values.push_back(sup);
    double last_r = 0.0, last_v = sup;
    double pending_v = sup;  // smallest threshold seen at the stalled radius
    for (int k = 0; k < level_count; ++k) {
        const double v = sup * std::pow(ratio, static_cast<double>(k) / (level_count - 1));
        // top threshold: the point measure at the sup itself (exact for
        // plateaued fields, ~zero for smooth peaks); window averages below,
        // clamped so they never reach above the sup where the measure is
        // identically zero and would dilute plateau values
        double mu;
        if (k == 0) {
            mu = wsum[rank_of(v)];
        } else {
            const double b = std::min(v / half, sup);
            mu = measure_avg(std::min(v * half, b * 0.999999), b);
        }
        double r = std::pow(mu / omega, 1.0 / n);
        r = std::max(r, last_r);  // monotone pass over measure noise
        const double jump_eps = 1e-9 * std::max(1.0, last_r);
        if (r > last_r + 2.0 * jump_eps) {
            // a genuine jump of f* shows as a large value drop at a stalled
            // radius; sub-threshold stalls are measure noise and are left to
            // the ramp, otherwise noise would seed spurious jumps that
            // poison small-shift energies of the profile field
            if (pending_v < 0.9 * last_v) {
                prof.radii.push_back(last_r + jump_eps);
                prof.values.push_back(pending_v);
                last_v = pending_v;
            }
            if (v <= last_v) {  // equal value: a plateau knot (flat segment)
                prof.radii.push_back(r);
                prof.values.push_back(v);
                last_r = r;
                last_v = v;
            }
            pending_v = last_v;
        } else {
            pending_v = std::min(pending_v, v);
        }
    }
    if (pending_v < 0.9 * last_v) {
        prof.radii.push_back(last_r + 1e-9 * std::max(1.0, last_r));
        prof.values.push_back(pending_v);
    }
    if (prof.radii.size() < 2) {
        prof.radii.push_back(last_r + 1e-9);
        prof.values.push_back(0.0);
    }
    return prof;
}

double triple_convolution(const FieldSpec& f, const FieldSpec& k, const FieldSpec& g,
                          int points_per_axis, double half_extent, int threads) {
    const int n = f.dim();
    if (n > 2) throw std::domain_error("triple_convolution: n <= 2 only");
    if (k.dim() != n || g.dim() != n)
        throw std::invalid_argument("triple_convolution: dimension mismatch");
    const int m = points_per_axis;
    const double L = half_extent;
    const double h = 2.0 * L / m;

    std::vector<double> xs(m), ys(m);
    for (int i = 0; i < m; ++i) {
        xs[i] = -L + (i + 0.5) * h;
        ys[i] = xs[i] + 0.5 * h;
    }

    if (n == 1) {
        std::vector<double> fx(m), gy(m), kt(2 * m - 1);
        for (int i = 0; i < m; ++i) {
            fx[i] = f.eval(Vec{xs[i], 0.0, 0.0});
            gy[i] = g.eval(Vec{ys[i], 0.0, 0.0});
        }
        for (int d = -(m - 1); d <= m - 1; ++d)
            kt[d + m - 1] = k.eval(Vec{d * h - 0.5 * h, 0.0, 0.0});
        double sum = 0.0;
        for (int i = 0; i < m; ++i) {
            if (fx[i] == 0.0) continue;
            double inner = 0.0;
            for (int j = 0; j < m; ++j) inner += kt[i - j + m - 1] * gy[j];
            sum += fx[i] * inner;
        }
        return sum * h * h;
    }

    std::vector<double> fx(static_cast<std::size_t>(m) * m),
        gy(static_cast<std::size_t>(m) * m);
    for (int b = 0; b < m; ++b)
        for (int a = 0; a < m; ++a) {
            fx[static_cast<std::size_t>(b) * m + a] = f.eval(Vec{xs[a], xs[b], 0.0});
            gy[static_cast<std::size_t>(b) * m + a] = g.eval(Vec{ys[a], ys[b], 0.0});
        }
    const int kd = 2 * m - 1;
    std::vector<double> kt(static_cast<std::size_t>(kd) * kd);
    for (int db = -(m - 1); db <= m - 1; ++db)
        for (int da = -(m - 1); da <= m - 1; ++da)
            kt[static_cast<std::size_t>(db + m - 1) * kd + (da + m - 1)] =
                k.eval(Vec{da * h - 0.5 * h, db * h - 0.5 * h, 0.0});

    std::vector<double> partial(static_cast<std::size_t>(m), 0.0);
    parallel_for(static_cast<std::size_t>(m), [&](std::size_t ib) {
        double sum = 0.0;
        for (int ia = 0; ia < m; ++ia) {
            const double fv = fx[ib * m + ia];
            if (fv == 0.0) continue;
            for (int jb = 0; jb < m; ++jb) {
                const double* krow =
                    &kt[static_cast<std::size_t>(static_cast<int>(ib) - jb + m - 1) * kd +
                        (ia + m - 1)];
                const double* grow = &gy[static_cast<std::size_t>(jb) * m];
                double inner = 0.0;
                for (int ja = 0; ja < m; ++ja) inner += krow[-ja] * grow[ja];
                sum += fv * inner;
            }
        }
        partial[ib] = sum;
    }, threads);
    double total = 0.0;
    for (double s : partial) total += s;
    return total * h * h * h * h;
}

GapResult riesz_gap(const FieldSpec& f, const FieldSpec& k, const FieldSpec& g,
                    int points_per_axis, double half_extent,
                    const BoxQuad& measure_box, int level_count, int threads) {
    if (f.dim() > 2) throw std::domain_error("riesz_gap: n <= 2 only");
    if (!f.non_negative() || !k.non_negative() || !g.non_negative())
        throw std::invalid_argument("riesz_gap: inputs must be non-negative");

    GapResult out;
    out.lhs = triple_convolution(f, k, g, points_per_axis, half_extent, threads);
    const FieldSpec fs = schwarz_rearrange(f, level_count, measure_box).to_field();
    const FieldSpec ks = schwarz_rearrange(k, level_count, measure_box).to_field();
    const FieldSpec gs = schwarz_rearrange(g, level_count, measure_box).to_field();
    out.rhs = triple_convolution(fs, ks, gs, points_per_axis, half_extent, threads);
    return out;
}

GapResult polya_szego_gap(const FieldSpec& f, const StarBody& K,
                          const FracParams& params, BodyVariant variant,
                          const ProjQuad& quad, const BoxQuad& measure_box,
                          int level_count, int threads) {
    if (variant == BodyVariant::Minus)
        throw std::invalid_argument("polya_szego_gap: variant must be sym or plus");
    if (!f.non_negative())
        throw std::invalid_argument("polya_szego_gap: field must be non-negative");

    GapResult out;
    {
        const ProjBodyResult body =
            build_frac_body(f, params, K.grid, variant, quad, threads);
        out.lhs = anisotropic_energy(K, body);
    }
    const FieldSpec fstar = schwarz_rearrange(f, level_count, measure_box).to_field();
    const StarBody kstar = schwarz_ball(K);
    {
        const ProjBodyResult body =
            build_frac_body(fstar, params, K.grid, variant, quad, threads);
        out.rhs = anisotropic_energy(kstar, body);
    }
    return out;
}

}  // namespace fracbody
