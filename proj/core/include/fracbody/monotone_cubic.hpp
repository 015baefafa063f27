#pragma once

#include <cstddef>
#include <vector>

namespace fracbody {

/// Monotone C^1 cubic (Fritsch-Carlson) through (x_k, y_k) with x strictly
/// increasing. Used for radial rearrangement profiles, where a C^1 curve is
/// what keeps tensor Gauss-Legendre quadrature of the profile field fast;
/// piecewise-linear knots would leave O(h^2) kink errors on every ring.
class MonotoneCubic {
  public:
    MonotoneCubic() = default;
    MonotoneCubic(const std::vector<double>& x, const std::vector<double>& y);

    /// Clamped to y.front() / y.back() outside the knot range.
    double eval(double x) const;

    bool empty() const { return x_.empty(); }

  private:
    std::vector<double> x_, y_, m_;
};

}  // namespace fracbody
