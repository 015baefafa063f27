#pragma once

#include "fracbody/params.hpp"

#include <functional>
#include <vector>

namespace fracbody {

/// Grid for the singular integral over (0, infinity) of t^(-ps-1) phi(t) dt,
/// where phi is a shift-energy profile: phi(t) = O(t^q) near 0 (q = p for
/// Lipschitz-or-smoother fields, q = 1 for indicators) and phi(t) -> a
/// constant at infinity (2 |f|_p^p in the symmetric case).
///
/// [t_min, t_max] is covered by panels split at the powers of 10 inside the
/// window, with Gauss-Legendre nodes in log t. Outside the window the
/// integral is added analytically:
///   head: the profile is modeled as c t^q below t_min with
///         q = low_exponent + ps + 1; c is a mean over the first decade of
///         samples (single-sample quadrature noise cancels), and the head
///         is c t_min^(q-ps) / (q-ps) in closed form;
///   tail: tail_coeff t_max^-ps / ps.
struct TGrid {
    double t_min = 1e-3;
    double t_max = 1e2;
    int points = 120;
    /// local power-law order of the integrand near 0; q - ps - 1 with q as
    /// above. Must be > -1 for integrability.
    double low_exponent = 0.0;
    /// large-t limit of the profile.
    double tail_coeff = 0.0;

    void validate() const;
};

/// Evaluation nodes and weights for a fixed (grid, ps).
///
/// eval_points() lists every t at which a profile must be sampled: index 0
/// holds t_min itself (used by the head correction), the rest are the panel
/// quadrature nodes.
class TIntegrator {
  public:
    TIntegrator(const TGrid& grid, double ps);

    const std::vector<double>& eval_points() const { return points_; }

    /// Integral using profile values aligned with eval_points(), an explicit
    /// tail coefficient and the integrand order below t_min.
    double integrate(const std::vector<double>& profile_values, double tail_coeff,
                     double low_exponent) const;

    /// Average of the profile samples in the last decade [t_max/10, t_max];
    /// the numeric estimate of the profile's limit at infinity.
    double tail_average(const std::vector<double>& profile_values) const;

    double ps() const { return ps_; }
    const TGrid& grid() const { return grid_; }

  private:
    TGrid grid_;
    double ps_;
    std::vector<double> points_;   // t_min, then panel nodes (increasing)
    std::vector<double> weights_;  // d(log t) weights times t^-ps, panel nodes only
    std::size_t first_decade_end_ = 1;   // head-fit sample range [0, end)
    std::size_t last_decade_begin_ = 0;  // tail-average sample range
};

/// One-off form: integral over (0, infinity) of t^(-ps-1) profile(t) dt with
/// grid-supplied low_exponent and tail_coeff.
double t_integral(const std::function<double(double)>& profile,
                  const FracParams& params, const TGrid& grid);

}  // namespace fracbody
