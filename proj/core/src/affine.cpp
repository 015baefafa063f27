#include "fracbody/affine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fracbody {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

double det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 inverse3(const Mat3& m, double det) {
    Mat3 inv;
    inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
    inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
    inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
    inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
    inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
    inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
    inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
    inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
    inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    return inv;
}

/// Eigenvalues of the symmetric matrix A^T A by cyclic Jacobi; returns the
/// 2-norm condition number sqrt(lambda_max / lambda_min).
double condition_2norm(const Mat3& a, int n) {
    Mat3 g{};  // Gram matrix
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double sum = 0.0;
            for (int k = 0; k < n; ++k) sum += a[k][i] * a[k][j];
            g[i][j] = sum;
        }
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += g[i][j] * g[i][j];
        if (off < 1e-30) break;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (g[i][j] == 0.0) continue;
                const double theta = 0.5 * std::atan2(2.0 * g[i][j], g[i][i] - g[j][j]);
                const double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < n; ++k) {
                    const double gik = g[i][k], gjk = g[j][k];
                    g[i][k] = c * gik + s * gjk;
                    g[j][k] = -s * gik + c * gjk;
                }
                for (int k = 0; k < n; ++k) {
                    const double gki = g[k][i], gkj = g[k][j];
                    g[k][i] = c * gki + s * gkj;
                    g[k][j] = -s * gki + c * gkj;
                }
            }
    }
    double lo = g[0][0], hi = g[0][0];
    for (int i = 1; i < n; ++i) {
        lo = std::min(lo, g[i][i]);
        hi = std::max(hi, g[i][i]);
    }
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(hi / lo);
}

}  // namespace

AffineMap::AffineMap(int n) : AffineMap(n, nullptr, nullptr) {}

AffineMap::AffineMap(int n, const double* matrix, const double* translation)
    : n_(n), translation_(vec_zero()) {
    if (n < 1 || n > 3) throw std::invalid_argument("AffineMap: n must be 1, 2 or 3");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m_[i][j] = i == j ? 1.0 : 0.0;
    if (matrix) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m_[i][j] = matrix[i * n + j];
    }
    if (translation) {
        for (int i = 0; i < n; ++i) translation_[i] = translation[i];
    }
    finalize();
}

void AffineMap::finalize() {
    det_ = det3(m_);
    if (det_ == 0.0 || !std::isfinite(det_))
        throw std::invalid_argument("AffineMap: singular matrix");
    cond_ = condition_2norm(m_, n_);
    if (!(cond_ <= kMaxCondition)) {
        std::ostringstream msg;
        msg << "AffineMap: condition number " << cond_ << " exceeds cap "
            << kMaxCondition;
        throw std::invalid_argument(msg.str());
    }
    inv_ = inverse3(m_, det_);
}

AffineMap AffineMap::sl_normalized(int n, const double* matrix,
                                   const double* translation) {
    AffineMap raw(n, matrix, translation);
    const double scale = std::pow(std::abs(raw.det_), -1.0 / n);
    double scaled[9];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scaled[i * n + j] = raw.m_[i][j] * scale;
    double tr[3] = {raw.translation_[0], raw.translation_[1], raw.translation_[2]};
    return AffineMap(n, scaled, tr);
}

Vec AffineMap::apply_linear(const Vec& x) const {
    Vec y = vec_zero();
    for (int i = 0; i < n_; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n_; ++j) sum += m_[i][j] * x[j];
        y[i] = sum;
    }
    return y;
}

Vec AffineMap::apply_inverse_linear(const Vec& x) const {
    Vec y = vec_zero();
    for (int i = 0; i < n_; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n_; ++j) sum += inv_[i][j] * x[j];
        y[i] = sum;
    }
    return y;
}

Vec AffineMap::apply(const Vec& x) const { return apply_linear(x) + translation_; }

Vec AffineMap::apply_inverse(const Vec& x) const {
    return apply_inverse_linear(x - translation_);
}

Vec AffineMap::apply_inverse_transpose(const Vec& x) const {
    Vec y = vec_zero();
    for (int i = 0; i < n_; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n_; ++j) sum += inv_[j][i] * x[j];
        y[i] = sum;
    }
    return y;
}

bool AffineMap::is_identity() const {
    for (int i = 0; i < n_; ++i) {
        if (translation_[i] != 0.0) return false;
        for (int j = 0; j < n_; ++j)
            if (m_[i][j] != (i == j ? 1.0 : 0.0)) return false;
    }
    return true;
}

}  // namespace fracbody
