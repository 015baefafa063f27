#include "fracbody/constants.hpp"

#include "fracbody/sphere_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracbody {

double omega_n(int n) {
    if (n < 1) throw std::invalid_argument("omega_n: n must be >= 1");
    return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double sphere_area(int n) { return n * omega_n(n); }

double alpha_np(int n, double p, int level) {
    double eta[3] = {0.0, 0.0, 0.0};
    eta[n - 1] = 1.0;  // any direction works; the last axis is convenient
    return alpha_np_against(n, p, eta, level);
}

double alpha_np_against(int n, double p, const double* eta, int level) {
    if (p < 1.0) throw std::invalid_argument("alpha_np: p must be >= 1");
    if (n == 1) return 2.0;  // |<+-1, eta>|^p = 1 at both atoms
    const SphereGrid grid = sphere_grid(n, level);
    const Vec e = vec_make(n, eta);
    return grid.integrate(
        [&](const Vec& xi) { return std::pow(std::abs(dot(xi, e)), p); });
}

}  // namespace fracbody
