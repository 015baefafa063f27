#pragma once

#include "fracbody/box_quad.hpp"
#include "fracbody/field.hpp"
#include "fracbody/proj_body.hpp"
#include "fracbody/star_body.hpp"

#include <vector>

namespace fracbody {

/// Radially symmetric decreasing profile: the Schwarz symmetral f* of a
/// non-negative function, stored as knots (radius, value) with radii
/// increasing from 0 and values non-increasing.
struct RadialProfile {
    int n = 0;
    std::vector<double> radii;
    std::vector<double> values;

    double value_at(double r) const;
    /// Measure of the super-level set {f* >= t} read off the knots.
    double level_measure(double t) const;
    /// Integral of (f*)^p over R^n by radial quadrature of the knots.
    double norm_pow(double p) const;
    /// Catalog-compatible adapter; evaluation is value_at(|x|).
    FieldSpec to_field() const;
};

/// Measure of {f >= t}, t > 0, by box quadrature of the indicator.
double superlevel_measure(const FieldSpec& f, double t, const BoxQuad& q);

/// Layer-cake construction of f*: level_count geometric thresholds between
/// (sampled sup f) * 1e-4 and the sampled sup; each threshold contributes
/// the knot r = (measure / omega_n)^(1/n). Rejects sign-changing fields.
RadialProfile schwarz_rearrange(const FieldSpec& f, int level_count, const BoxQuad& q);

struct GapResult {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Convolution-type triple integral of f(x) k(x-y) g(y) over offset uniform
/// grids (shared kernel table over index differences).
double triple_convolution(const FieldSpec& f, const FieldSpec& k, const FieldSpec& g,
                          int points_per_axis, double half_extent, int threads = 0);

/// lhs = triple integral of the inputs, rhs = the same with all three
/// Schwarz-symmetrized. Non-negative inputs, n <= 2.
GapResult riesz_gap(const FieldSpec& f, const FieldSpec& k, const FieldSpec& g,
                    int points_per_axis, double half_extent,
                    const BoxQuad& measure_box, int level_count = 128,
                    int threads = 0);

/// lhs = anisotropic energy of f w.r.t. K (symmetric or plus variant),
/// rhs = the energy of f* w.r.t. the Schwarz ball of K. Non-negative f.
GapResult polya_szego_gap(const FieldSpec& f, const StarBody& K,
                          const FracParams& params, BodyVariant variant,
                          const ProjQuad& quad, const BoxQuad& measure_box,
                          int level_count = 128, int threads = 0);

}  // namespace fracbody
