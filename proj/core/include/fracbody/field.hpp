#pragma once

#include "fracbody/affine.hpp"
#include "fracbody/monotone_cubic.hpp"
#include "fracbody/vec.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fracbody {

enum class FieldKind { BallIndicator, Gaussian, Bubble, Bump, RadialProfile };

std::string to_string(FieldKind kind);
FieldKind field_kind_from_string(const std::string& name);

/// One catalog entry: scale * f0(phi^-1(x) - center), where f0 is the base
/// profile of `kind` and phi the optional affine map. Base profiles:
///
///   ball_indicator(r):  1 on |y| <= r, else 0
///   gaussian(w):        exp(-|y|^2 / w^2)
///   bubble(sb):         (1 + |y|^2)^(-(n - 2 sb)/2), the p = 2 extremal shape
///   bump(r):            exp(1 - 1/(1 - |y/r|^2)) on |y| < r, else 0
///   radial_profile:     piecewise-linear decreasing data (radii, values)
struct FieldTerm {
    FieldKind kind = FieldKind::Gaussian;
    double radius = 1.0;   ///< ball/bump support radius, gaussian width, bubble order
    Vec center = vec_zero();
    double scale = 1.0;
    std::optional<AffineMap> affine;  ///< absent means identity
    // radial_profile data; radii strictly increasing from 0, values
    // decreasing. Evaluated through a monotone C^1 cubic in r^2 (prepared at
    // FieldSpec construction) so box quadrature of the profile keeps its
    // fast convergence.
    std::vector<double> profile_radii;
    std::vector<double> profile_values;
    std::shared_ptr<const MonotoneCubic> profile_interp;

    bool smooth() const { return kind == FieldKind::Gaussian || kind == FieldKind::Bubble || kind == FieldKind::Bump; }
};

/// An analytic test function on R^n: a sum of catalog terms. Evaluation and
/// gradients are deterministic and pure; all state is set at construction.
class FieldSpec {
  public:
    FieldSpec(int n, std::vector<FieldTerm> terms);

    /// Single-term conveniences.
    static FieldSpec ball_indicator(int n, double radius, const Vec& center = vec_zero(), double scale = 1.0);
    static FieldSpec gaussian(int n, double width, const Vec& center = vec_zero(), double scale = 1.0);
    static FieldSpec bubble(int n, double s, double scale = 1.0);
    static FieldSpec bump(int n, double radius, const Vec& center = vec_zero(), double scale = 1.0);
    static FieldSpec radial_profile(int n, std::vector<double> radii, std::vector<double> values);

    /// Returns a copy with phi composed on: (this o phi^-1).
    FieldSpec with_affine(const AffineMap& phi) const;
    /// Returns a copy translated by a: x -> f(x - a).
    FieldSpec translated(const Vec& a) const;
    /// Returns the sum of this field and g (term concatenation).
    FieldSpec plus(const FieldSpec& g) const;
    /// Returns the negated field.
    FieldSpec negated() const;

    int dim() const { return n_; }
    const std::vector<FieldTerm>& terms() const { return terms_; }

    double operator()(const Vec& x) const { return eval(x); }
    double eval(const Vec& x) const;

    /// Analytic gradient; throws std::domain_error for non-smooth kinds.
    Vec gradient(const Vec& x) const;

    bool smooth() const;        ///< every term has an analytic gradient
    bool non_negative() const;  ///< every term contributes >= 0 everywhere
    bool compact_support() const;

    /// sup |f|; exact for single-term fields, an upper bound for sums.
    double sup_bound() const;

    /// Radius R such that the field is zero (or negligible, for gaussian
    /// tails at 8 widths and bubbles at their documented truncation radius)
    /// outside |x| <= R.
    double effective_radius() const;

  private:
    int n_;
    std::vector<FieldTerm> terms_;
};

/// Point evaluation (free-function form).
double eval_field(const FieldSpec& f, const Vec& x);

/// Analytic gradient with chain rule through the affine map; rejects
/// indicator and profile kinds.
Vec eval_gradient(const FieldSpec& f, const Vec& x);

}  // namespace fracbody
