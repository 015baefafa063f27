#pragma once

#include "fracbody/box_quad.hpp"
#include "fracbody/field.hpp"
#include "fracbody/params.hpp"
#include "fracbody/sphere_grid.hpp"
#include "fracbody/star_body.hpp"
#include "fracbody/t_grid.hpp"

#include <memory>
#include <vector>

namespace fracbody {

enum class BodyVariant { Sym, Plus, Minus };

std::string to_string(BodyVariant v);

/// Quadrature bundle for gauge computations: the spatial box rule and the
/// t-window of the singular integral (low_exponent / tail_coeff fields of
/// the TGrid are derived per field and per parameter set by the builders).
struct ProjQuad {
    BoxQuad box;
    TGrid tgrid;
};

/// A computed polar projection body: the star body, its per-node gauge
/// values, and the quadrature metadata of the run.
struct ProjBodyResult {
    StarBody body;
    std::vector<double> gauge;
    FracParams params;
    BodyVariant variant = BodyVariant::Sym;
    TGrid tgrid;
    double box_half_extent = 0.0;
    int box_points = 0;
    double elapsed_seconds = 0.0;
    std::vector<double> node_seconds;  ///< per direction (antipodal pairs share)
};

struct FracBodySet {
    ProjBodyResult sym;
    ProjBodyResult plus;
    ProjBodyResult minus;

    const ProjBodyResult& get(BodyVariant v) const {
        switch (v) {
            case BodyVariant::Plus: return plus;
            case BodyVariant::Minus: return minus;
            default: return sym;
        }
    }
};

/// Shift-energy profiles of f along every grid direction, sampled on the
/// t-window. Profiles depend on (f, p, box, t-window) but not on s, so one
/// profile set serves a whole s-sweep.
///
/// Per antipodal pair the two one-sided quadrature routes to the same exact
/// quantity are averaged; the symmetric profile is their sum. This makes
/// gauge(xi) = gauge(-xi) exact for the symmetric body, makes the plus body
/// of -f bitwise the minus body of f, and keeps the nodewise identity
/// gauge_sym^ps = gauge_plus^ps + gauge_minus^ps at rounding level.
class FracProfileSet {
  public:
    /// absolute_value = true computes the profiles of |f| instead of f.
    FracProfileSet(FieldSpec f, double p, std::shared_ptr<const SphereGrid> grid,
                   const ProjQuad& quad, int threads = 0,
                   bool absolute_value = false);

    /// Bodies for one parameter triple; params.p must match the profile p.
    FracBodySet bodies(const FracParams& params) const;

    /// Gauge values only (cheaper than full bodies during sweeps).
    std::vector<double> gauges(const FracParams& params, BodyVariant v) const;

    const FieldSpec& field() const { return f_; }
    const std::shared_ptr<const SphereGrid>& grid() const { return grid_; }

  private:
    FieldSpec f_;
    double p_;
    std::shared_ptr<const SphereGrid> grid_;
    ProjQuad quad_;
    double small_shift_order_;
    std::vector<double> ts_;
    std::vector<std::size_t> pair_a_, pair_b_;  // pair_a[k] < pair_b[k] = mate
    std::vector<std::vector<double>> prof_plus_, prof_minus_;  // per pair
    std::vector<double> pair_seconds_;
    double elapsed_seconds_ = 0.0;

    void gauges_for(const FracParams& params, std::vector<double>& gp,
                    std::vector<double>& gm, std::vector<double>& gs) const;
};

/// Local power-law order q of shift energies of f near zero shift: q = 1
/// when any term is an indicator, else q = p. The integrand order near 0 is
/// then q - ps - 1; indicator fields therefore require ps < 1.
double small_shift_order(const FieldSpec& f, double p);

/// Builds the symmetric/plus/minus trio in one pass.
FracBodySet build_frac_bodies(const FieldSpec& f, const FracParams& params,
                              std::shared_ptr<const SphereGrid> grid,
                              const ProjQuad& quad, int threads = 0);

/// Single-variant wrapper.
ProjBodyResult build_frac_body(const FieldSpec& f, const FracParams& params,
                               std::shared_ptr<const SphereGrid> grid,
                               BodyVariant variant, const ProjQuad& quad,
                               int threads = 0);

/// Gauge of the symmetric body in direction xi (unit vector).
double frac_gauge(const FieldSpec& f, const Vec& xi, const FracParams& params,
                  const ProjQuad& quad);

/// Gauge of the plus (sign = +1) or minus (sign = -1) body.
double frac_gauge_signed(const FieldSpec& f, const Vec& xi, const FracParams& params,
                         int sign, const ProjQuad& quad);

/// Classical polar projection body data (gradient route).
struct ClassicalBody {
    StarBody body;
    std::vector<double> gauge;
    double p = 0.0;
    BodyVariant variant = BodyVariant::Sym;
};

/// gauge(xi)^p = integral of (<grad f, xi>)_+-^p (or |.|^p); smooth f only.
double classical_gauge(const FieldSpec& f, const Vec& xi, double p,
                       BodyVariant variant, const BoxQuad& box);

ClassicalBody build_classical_body(const FieldSpec& f, double p,
                                   std::shared_ptr<const SphereGrid> grid,
                                   BodyVariant variant, const BoxQuad& box,
                                   int threads = 0);

/// Production route for anisotropic energies: n * V~_{-ps}(K, body).
double anisotropic_energy(const StarBody& K, const ProjBodyResult& proj);

/// Convenience: builds the body first. K must live on the run's grid.
double anisotropic_energy(const FieldSpec& f, const StarBody& K,
                          const FracParams& params, BodyVariant variant,
                          const ProjQuad& quad, int threads = 0);

/// Brute-force double integral of |f(x)-f(y)|^p / gauge_K(x-y)^(n+ps) on
/// offset uniform grids (the independent oracle; n <= 2 only).
double direct_double_energy(const FieldSpec& f, const StarBody& K,
                            const FracParams& params, int points_per_axis,
                            double half_extent = 0.0, int threads = 0);

/// Scaling rows (s, (p(1-s))^(1/p) * frac gauge, classical gauge, residual)
/// for an increasing s-list; residuals are expected to fall monotonically.
struct LimitScalingRow {
    double s = 0.0;
    double scaled_gauge = 0.0;
    double classical = 0.0;
    double residual = 0.0;
};
std::vector<LimitScalingRow> limit_scaling_rows(const FieldSpec& f, const Vec& xi,
                                                double p,
                                                const std::vector<double>& s_list,
                                                const ProjQuad& quad);

}  // namespace fracbody
