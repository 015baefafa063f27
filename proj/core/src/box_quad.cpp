#include "fracbody/box_quad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracbody {

namespace {

inline double pow_p(double v, double p) {
    if (p == 2.0) return v * v;
    if (p == 1.0) return v;
    return std::pow(v, p);
}

SignedNorms signed_norm_pow_impl(const std::function<double(const Vec&)>& g,
                                 double p, const BoxQuad& q) {
    SignedNorms out;
    const std::size_t count = q.size();
    for (std::size_t i = 0; i < count; ++i) {
        const double v = g(q.node(i));
        const double w = q.weight(i);
        if (v > 0.0)
            out.plus += w * pow_p(v, p);
        else if (v < 0.0)
            out.minus += w * pow_p(-v, p);
    }
    return out;
}

}  // namespace

BoxQuad BoxQuad::make(int n, double half_extent, int points_per_axis) {
    if (n < 1 || n > 3) throw std::invalid_argument("BoxQuad: n must be 1, 2 or 3");
    if (!(half_extent > 0.0)) throw std::invalid_argument("BoxQuad: half_extent must be > 0");
    if (points_per_axis < 2) throw std::invalid_argument("BoxQuad: need >= 2 points per axis");
    BoxQuad q;
    q.n = n;
    q.half_extent = half_extent;
    q.points_per_axis = points_per_axis;
    const GaussLegendre rule = gauss_legendre_on(points_per_axis, -half_extent, half_extent);
    q.nodes1d = rule.nodes;
    q.weights1d = rule.weights;
    return q;
}

std::size_t BoxQuad::size() const {
    std::size_t s = 1;
    for (int d = 0; d < n; ++d) s *= static_cast<std::size_t>(points_per_axis);
    return s;
}

Vec BoxQuad::node(std::size_t flat) const {
    Vec x = vec_zero();
    for (int d = 0; d < n; ++d) {
        x[d] = nodes1d[flat % points_per_axis];
        flat /= points_per_axis;
    }
    return x;
}

double BoxQuad::weight(std::size_t flat) const {
    double w = 1.0;
    for (int d = 0; d < n; ++d) {
        w *= weights1d[flat % points_per_axis];
        flat /= points_per_axis;
    }
    return w;
}

double integrate_box(const std::function<double(const Vec&)>& g, const BoxQuad& q) {
    double sum = 0.0;
    const std::size_t count = q.size();
    for (std::size_t i = 0; i < count; ++i) sum += q.weight(i) * g(q.node(i));
    return sum;
}

SignedNorms box_signed_norm_pow(const FieldSpec& f, double p, const BoxQuad& q) {
    return signed_norm_pow_impl([&](const Vec& x) { return f.eval(x); }, p, q);
}

double box_norm_pow(const FieldSpec& f, double q, const BoxQuad& quad) {
    const SignedNorms n = box_signed_norm_pow(f, q, quad);
    return n.total();
}

ShiftEnergyEngine::ShiftEnergyEngine(FieldSpec f, BoxQuad q, double p, bool absolute_value)
    : f_(std::move(f)), q_(std::move(q)), p_(p), abs_(absolute_value) {
    if (f_.dim() != q_.n)
        throw std::invalid_argument("ShiftEnergyEngine: field/box dimension mismatch");
    if (!(p_ >= 1.0)) throw std::invalid_argument("ShiftEnergyEngine: p must be >= 1");
    const std::size_t count = q_.size();
    f0_.resize(count);
    for (std::size_t i = 0; i < count; ++i) f0_[i] = field_at(q_.node(i));
    norms_ = signed_norm_pow_impl([&](const Vec& x) { return field_at(x); }, p_, q_);
}

double ShiftEnergyEngine::field_at(const Vec& x) const {
    const double v = f_.eval(x);
    return abs_ ? std::abs(v) : v;
}

SignedNorms ShiftEnergyEngine::signed_energy(const Vec& z) const {
    const int m = q_.points_per_axis;
    const int n = q_.n;
    const double L = q_.half_extent;
    const auto& xs = q_.nodes1d;
    const auto& ws = q_.weights1d;

    // main pass: quadrature of (f(x+z) - f(x))_+-^p over the box
    double qp = 0.0, qm = 0.0;
    Vec x = vec_zero();
    std::size_t flat = 0;
    if (n == 1) {
        for (int i = 0; i < m; ++i) {
            x[0] = xs[i] + z[0];
            const double v = field_at(x) - f0_[i];
            if (v > 0.0)
                qp += ws[i] * pow_p(v, p_);
            else if (v < 0.0)
                qm += ws[i] * pow_p(-v, p_);
        }
    } else if (n == 2) {
        for (int j = 0; j < m; ++j) {
            x[1] = xs[j] + z[1];
            for (int i = 0; i < m; ++i, ++flat) {
                x[0] = xs[i] + z[0];
                const double v = field_at(x) - f0_[flat];
                const double w = ws[i] * ws[j];
                if (v > 0.0)
                    qp += w * pow_p(v, p_);
                else if (v < 0.0)
                    qm += w * pow_p(-v, p_);
            }
        }
    } else {
        for (int k = 0; k < m; ++k) {
            x[2] = xs[k] + z[2];
            for (int j = 0; j < m; ++j) {
                x[1] = xs[j] + z[1];
                for (int i = 0; i < m; ++i, ++flat) {
                    x[0] = xs[i] + z[0];
                    const double v = field_at(x) - f0_[flat];
                    const double w = ws[i] * ws[j] * ws[k];
                    if (v > 0.0)
                        qp += w * pow_p(v, p_);
                    else if (v < 0.0)
                        qm += w * pow_p(-v, p_);
                }
            }
        }
    }

    // correction: on (box - z) \ box the integrand is (f(x+z))_+-^p, which
    // integrates to |f_+-|_p^p minus its part on box /\ (box + z)
    double lo[3], hi[3];
    bool empty = false;
    for (int d = 0; d < n; ++d) {
        lo[d] = std::max(-L, -L + z[d]);
        hi[d] = std::min(L, L + z[d]);
        if (!(lo[d] < hi[d])) empty = true;
    }
    double rp = 0.0, rm = 0.0;
    if (!empty) {
        const GaussLegendre& ref = gauss_legendre(m);
        double mid[3], rad[3];
        for (int d = 0; d < n; ++d) {
            mid[d] = 0.5 * (hi[d] + lo[d]);
            rad[d] = 0.5 * (hi[d] - lo[d]);
        }
        Vec y = vec_zero();
        if (n == 1) {
            for (int i = 0; i < m; ++i) {
                y[0] = mid[0] + rad[0] * ref.nodes[i];
                const double v = field_at(y);
                const double w = rad[0] * ref.weights[i];
                if (v > 0.0)
                    rp += w * pow_p(v, p_);
                else if (v < 0.0)
                    rm += w * pow_p(-v, p_);
            }
        } else if (n == 2) {
            for (int j = 0; j < m; ++j) {
                y[1] = mid[1] + rad[1] * ref.nodes[j];
                for (int i = 0; i < m; ++i) {
                    y[0] = mid[0] + rad[0] * ref.nodes[i];
                    const double v = field_at(y);
                    const double w = rad[0] * rad[1] * ref.weights[i] * ref.weights[j];
                    if (v > 0.0)
                        rp += w * pow_p(v, p_);
                    else if (v < 0.0)
                        rm += w * pow_p(-v, p_);
                }
            }
        } else {
            for (int k = 0; k < m; ++k) {
                y[2] = mid[2] + rad[2] * ref.nodes[k];
                for (int j = 0; j < m; ++j) {
                    y[1] = mid[1] + rad[1] * ref.nodes[j];
                    for (int i = 0; i < m; ++i) {
                        y[0] = mid[0] + rad[0] * ref.nodes[i];
                        const double v = field_at(y);
                        const double w = rad[0] * rad[1] * rad[2] * ref.weights[i] *
                                         ref.weights[j] * ref.weights[k];
                        if (v > 0.0)
                            rp += w * pow_p(v, p_);
                        else if (v < 0.0)
                            rm += w * pow_p(-v, p_);
                    }
                }
            }
        }
    }

    SignedNorms out;
    out.plus = std::max(0.0, qp + (norms_.plus - rp));
    out.minus = std::max(0.0, qm + (norms_.minus - rm));
    return out;
}

double shifted_energy(const FieldSpec& f, const Vec& z, double p, const BoxQuad& q) {
    return ShiftEnergyEngine(f, q, p).energy(z);
}

double shifted_energy_signed(const FieldSpec& f, const Vec& z, double p, int sign,
                             const BoxQuad& q) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("shifted_energy_signed: sign must be +1 or -1");
    const SignedNorms e = ShiftEnergyEngine(f, q, p).signed_energy(z);
    return sign > 0 ? e.plus : e.minus;
}

}  // namespace fracbody
