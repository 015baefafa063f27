#include "fracbody/sphere_grid.hpp"

#include "fracbody/gauss_legendre.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracbody {

SphereGrid sphere_grid(int n, int level) {
    if (level < 1) throw std::invalid_argument("sphere_grid: level must be >= 1");
    SphereGrid g;
    g.n = n;
    g.level = level;

    if (n == 1) {
        g.nodes = {Vec{1.0, 0.0, 0.0}, Vec{-1.0, 0.0, 0.0}};
        g.weights = {1.0, 1.0};
        g.mate = {1, 0};
        return g;
    }

    if (n == 2) {
        const int m = 4 * level;  // even, so antipodes are grid points
        const double w = 2.0 * std::numbers::pi / m;
        g.nodes.reserve(m);
        g.weights.assign(m, w);
        g.mate.resize(m);
        for (int k = 0; k < m; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / m;
            g.nodes.push_back(Vec{std::cos(theta), std::sin(theta), 0.0});
            g.mate[k] = static_cast<std::size_t>((k + m / 2) % m);
        }
        // force bitwise closure under negation
        for (int k = 0; k < m / 2; ++k) g.nodes[k + m / 2] = -g.nodes[k];
        return g;
    }

    if (n == 3) {
        const int mu = 2 * level;   // Gauss-Legendre points in u = cos(theta)
        const int mphi = 4 * level; // uniform azimuths, even
        const GaussLegendre& gl = gauss_legendre(mu);
        const double wphi = 2.0 * std::numbers::pi / mphi;
        g.nodes.reserve(static_cast<std::size_t>(mu) * mphi);
        g.weights.reserve(g.nodes.capacity());
        g.mate.resize(static_cast<std::size_t>(mu) * mphi);
        for (int iu = 0; iu < mu; ++iu) {
            const double u = gl.nodes[iu];
            const double r = std::sqrt(std::max(0.0, 1.0 - u * u));
            for (int ip = 0; ip < mphi; ++ip) {
                const double phi = 2.0 * std::numbers::pi * ip / mphi;
                g.nodes.push_back(Vec{r * std::cos(phi), r * std::sin(phi), u});
                g.weights.push_back(gl.weights[iu] * wphi);
            }
        }
        // antipode of (iu, ip): u -> -u is the mirrored GL node, phi -> phi + pi
        for (int iu = 0; iu < mu; ++iu)
            for (int ip = 0; ip < mphi; ++ip) {
                const std::size_t i = static_cast<std::size_t>(iu) * mphi + ip;
                const std::size_t j =
                    static_cast<std::size_t>(mu - 1 - iu) * mphi + (ip + mphi / 2) % mphi;
                g.mate[i] = j;
            }
        // force bitwise closure under negation
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            const std::size_t j = g.mate[i];
            if (j > i) {
                g.nodes[j] = -g.nodes[i];
                g.weights[j] = g.weights[i];
            }
        }
        return g;
    }

    throw std::invalid_argument("sphere_grid: unsupported dimension");
}

}  // namespace fracbody
