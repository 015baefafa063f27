#pragma once

#include "fracbody/affine.hpp"
#include "fracbody/sphere_grid.hpp"
#include "fracbody/vec.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace fracbody {

/// A star body, represented by its radial function sampled on a shared
/// sphere grid. All rho values are finite and strictly positive (origin in
/// the interior); this is checked at construction.
struct StarBody {
    std::shared_ptr<const SphereGrid> grid;
    std::vector<double> rho;

    StarBody(std::shared_ptr<const SphereGrid> grid, std::vector<double> rho);

    int dim() const { return grid->n; }
    std::size_t size() const { return rho.size(); }
};

/// Ball of radius r on the given grid.
StarBody ball_body(std::shared_ptr<const SphereGrid> grid, double r = 1.0);

/// Dilate lambda K.
StarBody scaled(const StarBody& K, double lambda);

/// Gauge (Minkowski functional) |x| / rho_K(x/|x|); rho is interpolated on
/// the grid: the matching atom for n = 1, linearly in angle for n = 2, and
/// by first-order barycentric weights on the three nearest mesh nodes for
/// n = 3. Rejects x = 0.
double gauge_eval(const StarBody& K, const Vec& x);

/// (1/n) sum of w rho^n.
double volume(const StarBody& K);

/// Dual mixed volume (1/n) sum of w rho_K^(n-alpha) rho_L^alpha.
/// Requires a shared grid and alpha not in {0, n}.
double dual_mixed_volume(const StarBody& K, const StarBody& L, double alpha);

/// q-radial sum: rho^q = rho_K^q + rho_L^q nodewise (q != 0, shared grid).
StarBody radial_sum(const StarBody& K, const StarBody& L, double q);

/// Linear image: rho_(phi K)(xi) = 1 / gauge_K(phi^-1 xi), resampled on the
/// grid. The map must have zero translation.
StarBody linear_image(const AffineMap& phi, const StarBody& K);

/// Centered ball with the same volume.
StarBody schwarz_ball(const StarBody& K);

/// Support value h(xi) with h(xi)^p = sum of w |<xi, node>|^p rho_L^(n+p).
double moment_body_support(const StarBody& L, double p, const Vec& xi);

/// rho = exp(low-order random trigonometric / spherical-harmonic data),
/// clipped to [0.2, 5]; deterministic per seed.
StarBody random_star_body(std::uint64_t seed, int n,
                          std::shared_ptr<const SphereGrid> grid);

/// Dilate test: relative spread of the rho ratio below tol.
bool is_dilate_pair(const StarBody& K, const StarBody& L, double tol = 1e-6);

/// Dilate of K with the prescribed volume.
StarBody normalized_to_volume(const StarBody& K, double target_volume);

}  // namespace fracbody
