#include "fracbody/t_grid.hpp"

#include "fracbody/gauss_legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracbody {

void TGrid::validate() const {
    if (!(t_min > 0.0) || !(t_max > t_min))
        throw std::invalid_argument("TGrid: need 0 < t_min < t_max");
    if (points < 8) throw std::invalid_argument("TGrid: need at least 8 points");
    if (!(low_exponent > -1.0))
        throw std::invalid_argument("TGrid: low_exponent must be > -1 (integrability at 0)");
}

TIntegrator::TIntegrator(const TGrid& grid, double ps) : grid_(grid), ps_(ps) {
    grid_.validate();
    if (!(ps > 0.0)) throw std::invalid_argument("TIntegrator: ps must be > 0");

    // panels in log t, split at the powers of 10 inside the window; shift
    // profiles of catalog fields have their kinks at unit scales, so decade
    // boundaries keep every panel smooth
    const double u_lo = std::log(grid.t_min);
    const double u_hi = std::log(grid.t_max);
    std::vector<double> bounds{u_lo};
    const double log10 = std::log(10.0);
    for (int k = static_cast<int>(std::floor(u_lo / log10)) + 1;
         k * log10 < u_hi - 1e-12; ++k) {
        const double u = k * log10;
        if (u > u_lo + 1e-12) bounds.push_back(u);
    }
    bounds.push_back(u_hi);

    const int panels = static_cast<int>(bounds.size()) - 1;
    const int per_panel = std::max(4, (grid.points + panels - 1) / panels);
    points_.push_back(grid.t_min);  // head-correction sample
    const GaussLegendre& ref = gauss_legendre(per_panel);
    for (int pnl = 0; pnl < panels; ++pnl) {
        const double mid = 0.5 * (bounds[pnl + 1] + bounds[pnl]);
        const double rad = 0.5 * (bounds[pnl + 1] - bounds[pnl]);
        for (int k = 0; k < per_panel; ++k) {
            const double u = mid + rad * ref.nodes[k];
            const double t = std::exp(u);
            points_.push_back(t);
            weights_.push_back(rad * ref.weights[k] * std::pow(t, -ps));
        }
    }
    // sample ranges used for the head fit and the tail average
    const double head_cutoff = std::min(10.0 * grid.t_min, std::sqrt(grid.t_min * grid.t_max));
    first_decade_end_ = 1;
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (points_[i] <= head_cutoff) first_decade_end_ = i + 1;
    const double tail_cutoff = grid.t_max / 10.0;
    last_decade_begin_ = points_.size() - 1;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i] >= tail_cutoff) {
            last_decade_begin_ = i;
            break;
        }
    }
}

double TIntegrator::integrate(const std::vector<double>& profile_values,
                              double tail_coeff, double low_exponent) const {
    if (profile_values.size() != points_.size())
        throw std::invalid_argument("TIntegrator: profile sample count mismatch");
    if (!(low_exponent > -1.0))
        throw std::invalid_argument("TIntegrator: low_exponent must be > -1");

    double sum = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k)
        sum += weights_[k] * std::max(0.0, profile_values[k + 1]);

    // model the profile as c t^q below t_min (q from the integrand order);
    // c is averaged over the first decade of samples so that oscillating
    // quadrature noise in any single sample cancels out
    const double q = low_exponent + ps_ + 1.0;
    double c_sum = 0.0;
    std::size_t c_count = 0;
    for (std::size_t k = 0; k < first_decade_end_; ++k) {
        c_sum += std::max(0.0, profile_values[k]) / std::pow(points_[k], q);
        ++c_count;
    }
    const double c = c_count > 0 ? c_sum / c_count : 0.0;
    const double head = c * std::pow(grid_.t_min, q - ps_) / (q - ps_);
    const double tail = tail_coeff * std::pow(grid_.t_max, -ps_) / ps_;
    return head + sum + tail;
}

double TIntegrator::tail_average(const std::vector<double>& profile_values) const {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = last_decade_begin_; i < points_.size(); ++i) {
        sum += profile_values[i];
        ++count;
    }
    return count > 0 ? sum / count : 0.0;
}

double t_integral(const std::function<double(double)>& profile,
                  const FracParams& params, const TGrid& grid) {
    const TIntegrator integ(grid, params.ps);
    const auto& ts = integ.eval_points();
    std::vector<double> values(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) values[i] = profile(ts[i]);
    return integ.integrate(values, grid.tail_coeff, grid.low_exponent);
}

}  // namespace fracbody
