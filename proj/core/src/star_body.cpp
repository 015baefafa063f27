#include "fracbody/star_body.hpp"

#include "fracbody/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracbody {

namespace {

void require_shared_grid(const StarBody& K, const StarBody& L) {
    const bool same = K.grid == L.grid ||
                      (K.grid->n == L.grid->n && K.grid->level == L.grid->level &&
                       K.grid->size() == L.grid->size());
    if (!same) throw std::invalid_argument("star bodies must share a sphere grid");
}

/// rho interpolated at direction xi (unit vector).
double rho_at(const StarBody& K, const Vec& xi) {
    const SphereGrid& g = *K.grid;
    if (g.n == 1) return xi[0] > 0.0 ? K.rho[0] : K.rho[1];

    if (g.n == 2) {
        const int m = static_cast<int>(g.size());
        const double two_pi = 2.0 * std::numbers::pi;
        double theta = std::atan2(xi[1], xi[0]);
        if (theta < 0.0) theta += two_pi;
        const double pos = theta / (two_pi / m);
        int i0 = static_cast<int>(std::floor(pos)) % m;
        const double frac = pos - std::floor(pos);
        const int i1 = (i0 + 1) % m;
        return (1.0 - frac) * K.rho[i0] + frac * K.rho[i1];
    }

    // n = 3: three nearest nodes, barycentric weights in the plane spanned
    // by them (first-order; falls back to inverse-angle weights when the
    // triangle is degenerate or the query lies outside it).
    const std::size_t count = g.size();
    std::size_t best[3] = {0, 0, 0};
    double bestdot[3] = {-2.0, -2.0, -2.0};
    for (std::size_t i = 0; i < count; ++i) {
        const double d = dot(xi, g.nodes[i]);
        if (d > bestdot[0]) {
            bestdot[2] = bestdot[1]; best[2] = best[1];
            bestdot[1] = bestdot[0]; best[1] = best[0];
            bestdot[0] = d; best[0] = i;
        } else if (d > bestdot[1]) {
            bestdot[2] = bestdot[1]; best[2] = best[1];
            bestdot[1] = d; best[1] = i;
        } else if (d > bestdot[2]) {
            bestdot[2] = d; best[2] = i;
        }
    }
    const Vec p0 = g.nodes[best[0]], p1 = g.nodes[best[1]], p2 = g.nodes[best[2]];
    // solve [p0 p1 p2] lambda = xi
    const double det = p0[0] * (p1[1] * p2[2] - p1[2] * p2[1]) -
                       p1[0] * (p0[1] * p2[2] - p0[2] * p2[1]) +
                       p2[0] * (p0[1] * p1[2] - p0[2] * p1[1]);
    double l0 = 0.0, l1 = 0.0, l2 = 0.0;
    bool ok = std::abs(det) > 1e-12;
    if (ok) {
        l0 = (xi[0] * (p1[1] * p2[2] - p1[2] * p2[1]) -
              p1[0] * (xi[1] * p2[2] - xi[2] * p2[1]) +
              p2[0] * (xi[1] * p1[2] - xi[2] * p1[1])) / det;
        l1 = (p0[0] * (xi[1] * p2[2] - xi[2] * p2[1]) -
              xi[0] * (p0[1] * p2[2] - p0[2] * p2[1]) +
              p2[0] * (p0[1] * xi[2] - p0[2] * xi[1])) / det;
        l2 = (p0[0] * (p1[1] * xi[2] - p1[2] * xi[1]) -
              p1[0] * (p0[1] * xi[2] - p0[2] * xi[1]) +
              xi[0] * (p0[1] * p1[2] - p0[2] * p1[1])) / det;
        const double s = l0 + l1 + l2;
        ok = s > 1e-12 && l0 > -0.5 && l1 > -0.5 && l2 > -0.5;
        if (ok) {
            l0 /= s; l1 /= s; l2 /= s;
        }
    }
    double value;
    if (ok) {
        value = l0 * K.rho[best[0]] + l1 * K.rho[best[1]] + l2 * K.rho[best[2]];
    } else {
        value = 0.0;
    }
    if (!(value > 0.0)) {
        // inverse-angle fallback keeps the result inside the rho range
        double wsum = 0.0, vsum = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double ang = std::acos(std::clamp(bestdot[k], -1.0, 1.0));
            const double w = 1.0 / (ang + 1e-12);
            wsum += w;
            vsum += w * K.rho[best[k]];
        }
        value = vsum / wsum;
    }
    return value;
}

}  // namespace

StarBody::StarBody(std::shared_ptr<const SphereGrid> grid_, std::vector<double> rho_)
    : grid(std::move(grid_)), rho(std::move(rho_)) {
    if (!grid) throw std::invalid_argument("StarBody: null grid");
    if (rho.size() != grid->size())
        throw std::invalid_argument("StarBody: rho size does not match grid");
    for (double r : rho)
        if (!(r > 0.0) || !std::isfinite(r))
            throw std::invalid_argument("StarBody: radial function must be finite and > 0");
}

StarBody ball_body(std::shared_ptr<const SphereGrid> grid, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("ball_body: radius must be > 0");
    std::vector<double> rho(grid->size(), r);
    return StarBody(std::move(grid), std::move(rho));
}

StarBody scaled(const StarBody& K, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("scaled: lambda must be > 0");
    std::vector<double> rho = K.rho;
    for (double& r : rho) r *= lambda;
    return StarBody(K.grid, std::move(rho));
}

double gauge_eval(const StarBody& K, const Vec& x) {
    const double r = norm(x);
    if (!(r > 0.0)) throw std::domain_error("gauge_eval: x = 0 rejected");
    const Vec xi = (1.0 / r) * x;
    return r / rho_at(K, xi);
}

double volume(const StarBody& K) {
    const SphereGrid& g = *K.grid;
    const int n = g.n;
    double sum = 0.0;
    for (std::size_t i = 0; i < K.rho.size(); ++i) {
        double rn = K.rho[i];
        for (int d = 1; d < n; ++d) rn *= K.rho[i];
        sum += g.weights[i] * rn;
    }
    return sum / n;
}

double dual_mixed_volume(const StarBody& K, const StarBody& L, double alpha) {
    require_shared_grid(K, L);
    const int n = K.dim();
    if (alpha == 0.0 || alpha == static_cast<double>(n))
        throw std::invalid_argument("dual_mixed_volume: alpha must avoid {0, n}");
    const SphereGrid& g = *K.grid;
    double sum = 0.0;
    for (std::size_t i = 0; i < K.rho.size(); ++i)
        sum += g.weights[i] * std::pow(K.rho[i], n - alpha) * std::pow(L.rho[i], alpha);
    return sum / n;
}

StarBody radial_sum(const StarBody& K, const StarBody& L, double q) {
    require_shared_grid(K, L);
    if (q == 0.0) throw std::invalid_argument("radial_sum: q must be nonzero");
    std::vector<double> rho(K.rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
        rho[i] = std::pow(std::pow(K.rho[i], q) + std::pow(L.rho[i], q), 1.0 / q);
    return StarBody(K.grid, std::move(rho));
}

StarBody linear_image(const AffineMap& phi, const StarBody& K) {
    if (phi.dim() != K.dim())
        throw std::invalid_argument("linear_image: dimension mismatch");
    for (int d = 0; d < phi.dim(); ++d)
        if (phi.translation()[d] != 0.0)
            throw std::invalid_argument("linear_image: map must have zero translation");
    const SphereGrid& g = *K.grid;
    std::vector<double> rho(K.rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
        rho[i] = 1.0 / gauge_eval(K, phi.apply_inverse_linear(g.nodes[i]));
    return StarBody(K.grid, std::move(rho));
}

StarBody schwarz_ball(const StarBody& K) {
    const int n = K.dim();
    const double omega = volume(ball_body(K.grid, 1.0));  // grid's own omega_n
    return ball_body(K.grid, std::pow(volume(K) / omega, 1.0 / n));
}

double moment_body_support(const StarBody& L, double p, const Vec& xi) {
    if (!(p >= 1.0)) throw std::invalid_argument("moment_body_support: p must be >= 1");
    const SphereGrid& g = *L.grid;
    const int n = L.dim();
    double sum = 0.0;
    for (std::size_t i = 0; i < L.rho.size(); ++i)
        sum += g.weights[i] * std::pow(std::abs(dot(xi, g.nodes[i])), p) *
               std::pow(L.rho[i], n + p);
    return std::pow(sum, 1.0 / p);
}

StarBody random_star_body(std::uint64_t seed, int n,
                          std::shared_ptr<const SphereGrid> grid) {
    if (grid->n != n) throw std::invalid_argument("random_star_body: grid dimension mismatch");
    Rng rng(seed);
    auto clip = [](double v) { return std::clamp(v, 0.2, 5.0); };
    std::vector<double> rho(grid->size());

    if (n == 1) {
        rho[0] = clip(std::exp(0.8 * rng.uniform(-1.0, 1.0)));
        rho[1] = clip(std::exp(0.8 * rng.uniform(-1.0, 1.0)));
        return StarBody(std::move(grid), std::move(rho));
    }

    if (n == 2) {
        const int kmax = 4;
        double a0 = 0.5 * rng.uniform(-1.0, 1.0);
        std::vector<double> a(kmax + 1, 0.0), b(kmax + 1, 0.0);
        for (int k = 1; k <= kmax; ++k) {
            a[k] = 0.7 / k * rng.uniform(-1.0, 1.0);
            b[k] = 0.7 / k * rng.uniform(-1.0, 1.0);
        }
        for (std::size_t i = 0; i < grid->size(); ++i) {
            const double theta = std::atan2(grid->nodes[i][1], grid->nodes[i][0]);
            double gval = a0;
            for (int k = 1; k <= kmax; ++k)
                gval += a[k] * std::cos(k * theta) + b[k] * std::sin(k * theta);
            rho[i] = clip(std::exp(gval));
        }
        return StarBody(std::move(grid), std::move(rho));
    }

    // n = 3: harmonics through degree 2 via a linear form and a quadratic form
    double a0 = 0.4 * rng.uniform(-1.0, 1.0);
    Vec v = vec_zero();
    for (int d = 0; d < 3; ++d) v[d] = 0.5 * rng.uniform(-1.0, 1.0);
    double M[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) M[i][j] = M[j][i] = 0.4 * rng.uniform(-1.0, 1.0);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const Vec& xi = grid->nodes[i];
        double quad = 0.0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) quad += M[a][b] * xi[a] * xi[b];
        rho[i] = clip(std::exp(a0 + dot(v, xi) + quad));
    }
    return StarBody(std::move(grid), std::move(rho));
}

bool is_dilate_pair(const StarBody& K, const StarBody& L, double tol) {
    require_shared_grid(K, L);
    double lo = K.rho[0] / L.rho[0], hi = lo;
    for (std::size_t i = 1; i < K.rho.size(); ++i) {
        const double r = K.rho[i] / L.rho[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return (hi - lo) / hi < tol;
}

StarBody normalized_to_volume(const StarBody& K, double target_volume) {
    if (!(target_volume > 0.0))
        throw std::invalid_argument("normalized_to_volume: target must be > 0");
    const double v = volume(K);
    return scaled(K, std::pow(target_volume / v, 1.0 / K.dim()));
}

}  // namespace fracbody
