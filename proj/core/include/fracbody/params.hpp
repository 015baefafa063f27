#pragma once

namespace fracbody {

/// The parameter triple (n, s, p) of a fractional-order computation together
/// with the exponents derived from it.
///
/// The full constraint set is 0 < s < 1, 1 < p < n/s; it makes the Sobolev
/// exponent n p/(n - p s) finite and > p. Limit sweeps with s -> 1 need the
/// gauge integrals but not the Sobolev exponent, so they construct their
/// parameters through for_limit_sweep(), which drops the p < n/s cap.
struct FracParams {
    int n = 0;
    double s = 0.0;
    double p = 0.0;
    double ps = 0.0;           ///< p * s
    double sobolev_exp = 0.0;  ///< n p / (n - p s); NaN when ps >= n

    /// Only 0 < s < 1 and p > 1 are enforced; sobolev_exp is NaN if ps >= n.
    static FracParams for_limit_sweep(int n, double s, double p);
};

/// Enforces every invariant; throws std::invalid_argument with a distinct
/// diagnostic per violated constraint (dimension, s range, p range).
FracParams validate_params(int n, double s, double p);

}  // namespace fracbody
