#include "fracbody/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace fracbody {

namespace {

GaussLegendre compute(int m) {
    if (m < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    GaussLegendre gl;
    gl.nodes.assign(m, 0.0);
    gl.weights.assign(m, 0.0);
    const int half = (m + 1) / 2;
    for (int k = 0; k < half; ++k) {
        // Chebyshev-like initial guess for the k-th positive root.
        double x = std::cos(std::numbers::pi * (k + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_m(x) and P'_m(x).
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < m; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
            }
            dp = m * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        gl.nodes[k] = -x;
        gl.nodes[m - 1 - k] = x;
        gl.weights[k] = w;
        gl.weights[m - 1 - k] = w;
    }
    if (m % 2 == 1) gl.nodes[m / 2] = 0.0;  // exact center node
    return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int m) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, compute(m)).first;
    return it->second;
}

GaussLegendre gauss_legendre_on(int m, double a, double b) {
    const GaussLegendre& ref = gauss_legendre(m);
    GaussLegendre out;
    out.nodes.resize(m);
    out.weights.resize(m);
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    for (int k = 0; k < m; ++k) {
        out.nodes[k] = mid + rad * ref.nodes[k];
        out.weights[k] = rad * ref.weights[k];
    }
    return out;
}

}  // namespace fracbody
