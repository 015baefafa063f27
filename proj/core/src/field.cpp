#include "fracbody/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracbody {

std::string to_string(FieldKind kind) {
    switch (kind) {
        case FieldKind::BallIndicator: return "ball_indicator";
        case FieldKind::Gaussian: return "gaussian";
        case FieldKind::Bubble: return "bubble";
        case FieldKind::Bump: return "bump";
        case FieldKind::RadialProfile: return "radial_profile";
    }
    throw std::logic_error("unknown FieldKind");
}

FieldKind field_kind_from_string(const std::string& name) {
    if (name == "ball_indicator" || name == "ball") return FieldKind::BallIndicator;
    if (name == "gaussian") return FieldKind::Gaussian;
    if (name == "bubble") return FieldKind::Bubble;
    if (name == "bump") return FieldKind::Bump;
    if (name == "radial_profile") return FieldKind::RadialProfile;
    throw std::invalid_argument("unknown field kind '" + name + "'");
}

namespace {

double frobenius(const AffineMap& a) {
    double sum = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) sum += a.entry(i, j) * a.entry(i, j);
    return std::sqrt(sum);
}

/// Base profile value at y (term-local coordinates), peak-normalized to 1.
double base_value(const FieldTerm& t, int n, const Vec& y) {
    const double r2 = norm2(y);
    switch (t.kind) {
        case FieldKind::BallIndicator:
            return r2 <= t.radius * t.radius ? 1.0 : 0.0;
        case FieldKind::Gaussian:
            return std::exp(-r2 / (t.radius * t.radius));
        case FieldKind::Bubble: {
            const double e = 0.5 * (n - 2.0 * t.radius);
            return std::pow(1.0 + r2, -e);
        }
        case FieldKind::Bump: {
            const double u = r2 / (t.radius * t.radius);
            if (u >= 1.0) return 0.0;
            return std::exp(1.0 - 1.0 / (1.0 - u));
        }
        case FieldKind::RadialProfile: {
            const double r = std::sqrt(r2);
            if (r >= t.profile_radii.back()) return 0.0;
            return t.profile_interp->eval(r2);
        }
    }
    return 0.0;
}

/// Base profile gradient at y; only called for smooth kinds.
Vec base_gradient(const FieldTerm& t, int n, const Vec& y) {
    const double r2 = norm2(y);
    switch (t.kind) {
        case FieldKind::Gaussian: {
            const double w2 = t.radius * t.radius;
            return (-2.0 / w2 * std::exp(-r2 / w2)) * y;
        }
        case FieldKind::Bubble: {
            const double e = 0.5 * (n - 2.0 * t.radius);
            return (-2.0 * e * std::pow(1.0 + r2, -e - 1.0)) * y;
        }
        case FieldKind::Bump: {
            const double rr = t.radius * t.radius;
            const double u = r2 / rr;
            if (u >= 1.0 - 1e-12) return vec_zero();
            const double g = std::exp(1.0 - 1.0 / (1.0 - u));
            const double d = 1.0 - u;
            return (-2.0 * g / (rr * d * d)) * y;
        }
        default:
            break;
    }
    throw std::domain_error("gradient undefined for kind " + to_string(t.kind));
}

void validate_term(const FieldTerm& t, int n) {
    if (t.kind == FieldKind::RadialProfile) {
        const auto& r = t.profile_radii;
        const auto& v = t.profile_values;
        if (r.size() < 2 || r.size() != v.size())
            throw std::invalid_argument("radial_profile: need >= 2 matching knots");
        for (std::size_t k = 0; k + 1 < r.size(); ++k) {
            if (!(r[k] < r[k + 1]))
                throw std::invalid_argument("radial_profile: radii must be strictly increasing");
            if (v[k + 1] > v[k] + 1e-12)
                throw std::invalid_argument("radial_profile: values must be non-increasing");
        }
        if (r.front() < 0.0) throw std::invalid_argument("radial_profile: negative radius");
        return;
    }
    if (!(t.radius > 0.0))
        throw std::invalid_argument(to_string(t.kind) + ": width/radius must be > 0");
    if (t.kind == FieldKind::Bubble && !(t.radius < 0.5 * n))
        throw std::invalid_argument("bubble: order must be < n/2 for a decaying profile");
    if (t.affine && t.affine->dim() != n)
        throw std::invalid_argument("field term: affine map dimension mismatch");
}

}  // namespace

FieldSpec::FieldSpec(int n, std::vector<FieldTerm> terms)
    : n_(n), terms_(std::move(terms)) {
    if (n < 1 || n > 3) throw std::invalid_argument("FieldSpec: n must be 1, 2 or 3");
    if (terms_.empty()) throw std::invalid_argument("FieldSpec: no terms");
    for (auto& t : terms_) {
        validate_term(t, n);
        if (t.kind == FieldKind::RadialProfile && !t.profile_interp) {
            std::vector<double> u(t.profile_radii.size());
            for (std::size_t k = 0; k < u.size(); ++k)
                u[k] = t.profile_radii[k] * t.profile_radii[k];
            t.profile_interp =
                std::make_shared<MonotoneCubic>(u, t.profile_values);
        }
    }
}

FieldSpec FieldSpec::ball_indicator(int n, double radius, const Vec& center, double scale) {
    FieldTerm t;
    t.kind = FieldKind::BallIndicator;
    t.radius = radius;
    t.center = center;
    t.scale = scale;
    return FieldSpec(n, {t});
}

FieldSpec FieldSpec::gaussian(int n, double width, const Vec& center, double scale) {
    FieldTerm t;
    t.kind = FieldKind::Gaussian;
    t.radius = width;
    t.center = center;
    t.scale = scale;
    return FieldSpec(n, {t});
}

FieldSpec FieldSpec::bubble(int n, double s, double scale) {
    FieldTerm t;
    t.kind = FieldKind::Bubble;
    t.radius = s;
    t.scale = scale;
    return FieldSpec(n, {t});
}

FieldSpec FieldSpec::bump(int n, double radius, const Vec& center, double scale) {
    FieldTerm t;
    t.kind = FieldKind::Bump;
    t.radius = radius;
    t.center = center;
    t.scale = scale;
    return FieldSpec(n, {t});
}

FieldSpec FieldSpec::radial_profile(int n, std::vector<double> radii,
                                    std::vector<double> values) {
    FieldTerm t;
    t.kind = FieldKind::RadialProfile;
    t.profile_radii = std::move(radii);
    t.profile_values = std::move(values);
    return FieldSpec(n, {t});
}

FieldSpec FieldSpec::with_affine(const AffineMap& phi) const {
    if (phi.dim() != n_) throw std::invalid_argument("with_affine: dimension mismatch");
    std::vector<FieldTerm> out = terms_;
    for (auto& t : out) {
        if (!t.affine) {
            t.affine = phi;
            continue;
        }
        // (f0 o psi^-1) o phi^-1 = f0 o (phi o psi)^-1
        const AffineMap& psi = *t.affine;
        double m[9];
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                double sum = 0.0;
                for (int k = 0; k < n_; ++k) sum += phi.entry(i, k) * psi.entry(k, j);
                m[i * n_ + j] = sum;
            }
        const Vec b = phi.apply(psi.translation());
        double tr[3] = {b[0], b[1], b[2]};
        t.affine = AffineMap(n_, m, tr);
    }
    return FieldSpec(n_, std::move(out));
}

FieldSpec FieldSpec::translated(const Vec& a) const {
    std::vector<FieldTerm> out = terms_;
    for (auto& t : out) {
        if (t.affine) {
            const Vec b = t.affine->translation() + a;
            double m[9];
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) m[i * n_ + j] = t.affine->entry(i, j);
            double tr[3] = {b[0], b[1], b[2]};
            t.affine = AffineMap(n_, m, tr);
        } else {
            t.center = t.center + a;
        }
    }
    return FieldSpec(n_, std::move(out));
}

FieldSpec FieldSpec::plus(const FieldSpec& g) const {
    if (g.n_ != n_) throw std::invalid_argument("plus: dimension mismatch");
    std::vector<FieldTerm> out = terms_;
    out.insert(out.end(), g.terms_.begin(), g.terms_.end());
    return FieldSpec(n_, std::move(out));
}

FieldSpec FieldSpec::negated() const {
    std::vector<FieldTerm> out = terms_;
    for (auto& t : out) t.scale = -t.scale;
    return FieldSpec(n_, std::move(out));
}

double FieldSpec::eval(const Vec& x) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        const Vec y = (t.affine ? t.affine->apply_inverse(x) : x) - t.center;
        sum += t.scale * base_value(t, n_, y);
    }
    return sum;
}

Vec FieldSpec::gradient(const Vec& x) const {
    Vec g = vec_zero();
    for (const auto& t : terms_) {
        if (!t.smooth())
            throw std::domain_error("gradient undefined for kind " + to_string(t.kind));
        const Vec y = (t.affine ? t.affine->apply_inverse(x) : x) - t.center;
        Vec gt = base_gradient(t, n_, y);
        if (t.affine) gt = t.affine->apply_inverse_transpose(gt);
        g = g + t.scale * gt;
    }
    return g;
}

bool FieldSpec::smooth() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const FieldTerm& t) { return t.smooth(); });
}

bool FieldSpec::non_negative() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const FieldTerm& t) { return t.scale >= 0.0; });
}

bool FieldSpec::compact_support() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const FieldTerm& t) {
        return t.kind != FieldKind::Gaussian && t.kind != FieldKind::Bubble;
    });
}

double FieldSpec::sup_bound() const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        const double peak =
            t.kind == FieldKind::RadialProfile ? t.profile_values.front() : 1.0;
        sum += std::abs(t.scale) * peak;
    }
    return sum;
}

double FieldSpec::effective_radius() const {
    double radius = 0.0;
    for (const auto& t : terms_) {
        double base;
        switch (t.kind) {
            case FieldKind::Gaussian: base = 8.0 * t.radius; break;
            case FieldKind::Bubble: base = 12.0; break;  // documented truncation
            case FieldKind::RadialProfile: base = t.profile_radii.back(); break;
            default: base = t.radius; break;
        }
        double r;
        if (t.affine) {
            r = norm(t.affine->apply(t.center)) + frobenius(*t.affine) * base;
        } else {
            r = norm(t.center) + base;
        }
        radius = std::max(radius, r);
    }
    return radius;
}

double eval_field(const FieldSpec& f, const Vec& x) { return f.eval(x); }

Vec eval_gradient(const FieldSpec& f, const Vec& x) { return f.gradient(x); }

}  // namespace fracbody
