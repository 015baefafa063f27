#include "fracbody/monotone_cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracbody {

MonotoneCubic::MonotoneCubic(const std::vector<double>& x, const std::vector<double>& y)
    : x_(x), y_(y) {
    if (x_.size() != y_.size() || x_.size() < 2)
        throw std::invalid_argument("MonotoneCubic: need >= 2 matching knots");
    const std::size_t n = x_.size();
    std::vector<double> d(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!(x_[k + 1] > x_[k]))
            throw std::invalid_argument("MonotoneCubic: x must be strictly increasing");
        d[k] = (y_[k + 1] - y_[k]) / (x_[k + 1] - x_[k]);
    }
    m_.assign(n, 0.0);
    m_[0] = d[0];
    m_[n - 1] = d[n - 2];
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (d[k - 1] * d[k] <= 0.0)
            m_[k] = 0.0;
        else
            m_[k] = 0.5 * (d[k - 1] + d[k]);
    }
    // Fritsch-Carlson limiter keeps each segment monotone
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (d[k] == 0.0) {
            m_[k] = m_[k + 1] = 0.0;
            continue;
        }
        const double a = m_[k] / d[k];
        const double b = m_[k + 1] / d[k];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            m_[k] = tau * a * d[k];
            m_[k + 1] = tau * b * d[k];
        }
    }
}

double MonotoneCubic::eval(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[k + 1] - x_[k];
    const double s = (x - x_[k]) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * y_[k] + h10 * h * m_[k] + h01 * y_[k + 1] + h11 * h * m_[k + 1];
}

}  // namespace fracbody
