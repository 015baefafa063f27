#pragma once

#include "fracbody/field.hpp"
#include "fracbody/gauss_legendre.hpp"
#include "fracbody/vec.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace fracbody {

/// Tensorized Gauss-Legendre rule on the box [-L, L]^n.
///
/// The half extent must cover the (effective) support of every field in the
/// run; callers size it from FieldSpec::effective_radius(). Discontinuous
/// indicator integrands converge only at O(1/points) and carry a documented
/// degraded tolerance (1% default) instead of any cell clipping.
struct BoxQuad {
    int n = 0;
    double half_extent = 0.0;
    int points_per_axis = 0;
    std::vector<double> nodes1d;    ///< on [-L, L]
    std::vector<double> weights1d;

    static BoxQuad make(int n, double half_extent, int points_per_axis);

    std::size_t size() const;
    Vec node(std::size_t flat) const;
    double weight(std::size_t flat) const;
};

/// Plain quadrature of g over the box.
double integrate_box(const std::function<double(const Vec&)>& g, const BoxQuad& q);

/// Integral of max(f,0)^p and max(-f,0)^p over the box (computed in one pass);
/// |f|^p integrates to the sum of the two.
struct SignedNorms {
    double plus = 0.0;
    double minus = 0.0;
    double total() const { return plus + minus; }
};
SignedNorms box_signed_norm_pow(const FieldSpec& f, double p, const BoxQuad& q);

/// Integral of |f|^q over the box.
double box_norm_pow(const FieldSpec& f, double q, const BoxQuad& quad);

/// Shift-difference energies: integrals over R^n of
///     (f(x+z) - f(x))_+^p  and  (f(x+z) - f(x))_-^p.
///
/// The grid covers the box only; the part of the integrand living on
/// (box - z) \ box, where f vanishes, is accounted for exactly through
///     |f|_p^p - integral of |f|^p over box /\ (box + z),
/// so the result saturates to the exact disjoint-support limit once |z|
/// exceeds the support diameter. Requires supp f inside the box (up to the
/// documented gaussian/bubble truncation).
///
/// The engine caches field values at the grid nodes; it is immutable after
/// construction and safe to share across threads.
class ShiftEnergyEngine {
  public:
    ShiftEnergyEngine(FieldSpec f, BoxQuad q, double p, bool absolute_value = false);

    SignedNorms signed_energy(const Vec& z) const;
    double energy(const Vec& z) const { return signed_energy(z).total(); }

    const SignedNorms& field_norms() const { return norms_; }
    const FieldSpec& field() const { return f_; }
    const BoxQuad& box() const { return q_; }
    double exponent() const { return p_; }

  private:
    FieldSpec f_;
    BoxQuad q_;
    double p_;
    bool abs_;
    std::vector<double> f0_;  // field at box nodes, flattened
    SignedNorms norms_;

    double field_at(const Vec& x) const;
};

/// Integral over R^n of |f(x+z) - f(x)|^p (split-formula route above).
double shifted_energy(const FieldSpec& f, const Vec& z, double p, const BoxQuad& q);

/// Signed variant; sign = +1 for the positive part, -1 for the negative part.
double shifted_energy_signed(const FieldSpec& f, const Vec& z, double p, int sign,
                             const BoxQuad& q);

}  // namespace fracbody
