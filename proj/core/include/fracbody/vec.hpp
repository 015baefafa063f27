#pragma once

#include <array>
#include <cmath>

namespace fracbody {

/// Fixed-capacity vector for points in R^n, n <= 3. The active dimension is
/// carried by the surrounding object (field, grid, body); unused slots are
/// kept at zero so norms and dot products can always run over all 3 entries.
using Vec = std::array<double, 3>;

inline constexpr int kMaxDim = 3;

inline Vec vec_zero() { return {0.0, 0.0, 0.0}; }

inline Vec vec_make(int n, const double* c) {
    Vec v = vec_zero();
    for (int i = 0; i < n; ++i) v[i] = c[i];
    return v;
}

inline double dot(const Vec& a, const Vec& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm2(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec operator+(const Vec& a, const Vec& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec operator-(const Vec& a, const Vec& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec operator*(double s, const Vec& a) {
    return {s * a[0], s * a[1], s * a[2]};
}

inline Vec operator-(const Vec& a) { return {-a[0], -a[1], -a[2]}; }

inline Vec normalized(const Vec& a) {
    const double r = norm(a);
    return {a[0] / r, a[1] / r, a[2] / r};
}

}  // namespace fracbody
