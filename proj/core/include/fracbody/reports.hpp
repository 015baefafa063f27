#pragma once

#include "fracbody/proj_body.hpp"
#include "fracbody/rearrange.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fracbody {

/// One asserted (or merely recorded) comparison. relation is "<=", ">=" or
/// "~=" (two-sided within tolerance); margin is the relative slack, positive
/// when the relation holds strictly.
struct CheckRow {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string relation;
    double tolerance = 0.0;
    bool pass = false;
    double margin = 0.0;
    bool asserted = true;  ///< false: recorded for inspection, never fails a run
};

CheckRow make_check(std::string name, double lhs, std::string relation, double rhs,
                    double tolerance, bool asserted = true);

/// Structured result record. Deterministic given config + seed; wall-clock
/// timings are kept apart so serialization stays byte-stable.
struct Report {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<CheckRow> checks;
    std::vector<std::string> table_header;
    std::vector<std::vector<double>> table;
    std::vector<std::pair<std::string, double>> timings;  ///< sidecar only

    bool all_pass() const;
    void add_scalar(std::string name, double value);
    void add_input(std::string name, std::string value);
};

/// Run-wide quadrature/report configuration.
struct HarnessConfig {
    int sphere_level = 24;
    ProjQuad quad;
    double tolerance = 0.02;
    int threads = 0;
    int rearrange_levels = 128;
    int measure_points = 0;   ///< level-set box points/axis; 0 = per-n default
    int oracle_points = 0;    ///< double-integral oracle points/axis; 0 = default
};

/// Default quadrature sizes for a field living in |x| <= radius.
ProjQuad default_proj_quad(int n, double radius);
BoxQuad default_measure_box(int n, double radius, int points = 0);
int default_oracle_points(int n);

/// Sobolev chain on one field: A = |f|_q^p (q the Sobolev exponent),
/// B = n omega_n^((n+ps)/n) vol(body)^(-ps/n), C = Euclidean seminorm.
/// Asserts B <= C; records A/B, A/C. For non-negative f the asymmetric
/// variant (factor 2, plus body) is asserted as well.
Report sobolev_chain_report(const FieldSpec& f, const FracParams& params,
                            const HarnessConfig& cfg);

/// seminorm(|f|) <= seminorm(f), equality iff f has constant sign.
Report abs_value_reduction_check(const FieldSpec& f, const FracParams& params,
                                 const HarnessConfig& cfg);

/// vol(body(f))^(-ps/n) >= vol(body(f*))^(-ps/n) for the sym and plus bodies.
Report affine_ps_report(const FieldSpec& f, const FracParams& params,
                        const HarnessConfig& cfg);

/// Radial-sum identity of the sym/plus/minus trio plus the volume form
/// vol(sym)^(-ps/n) >= vol(plus)^(-ps/n) + vol(minus)^(-ps/n).
Report asym_strengthening_report(const FieldSpec& f, const FracParams& params,
                                 const HarnessConfig& cfg);

/// Volume-normalized body of f against seeded random candidates of equal
/// volume: the body's energy must be minimal.
Report optimal_body_report(const FieldSpec& f, const FracParams& params,
                           int candidate_count, std::uint64_t seed,
                           const HarnessConfig& cfg);

/// p(1-s) * energy(f, K, s) rows against the gradient-route target
/// n V~_{-p}(K, classical body); residuals must decrease along s_list.
Report bbm_limit_report(const FieldSpec& f, const StarBody& K, double p,
                        const std::vector<double>& s_list, const HarnessConfig& cfg);

/// Riesz rearrangement gap for an indicator triple.
Report riesz_report(const FieldSpec& f, const FieldSpec& k, const FieldSpec& g,
                    const HarnessConfig& cfg, int points_per_axis,
                    double half_extent);

/// Anisotropic rearrangement gap (lhs >= rhs).
Report polya_szego_report(const FieldSpec& f, const StarBody& K,
                          const FracParams& params, BodyVariant variant,
                          const HarnessConfig& cfg);

}  // namespace fracbody
