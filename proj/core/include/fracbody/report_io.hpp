#pragma once

#include "fracbody/rearrange.hpp"
#include "fracbody/reports.hpp"
#include "fracbody/star_body.hpp"

#include <string>

namespace fracbody {

/// Deterministic JSON (stable key order, no timestamps or timings).
std::string report_to_json(const Report& report);

/// Volatile metadata sidecar: stage timings.
std::string report_meta_to_json(const Report& report);

/// RFC-4180 CSV with a mandatory header row. Reports with a table emit the
/// table; others emit one row per scalar and per check
/// (record,name,lhs,rhs,relation,tolerance,pass,margin).
std::string report_to_csv(const Report& report);

/// Canonical field encoding: kind tag plus numeric arrays.
std::string field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const std::string& json_text);

/// StarBody as {"n":..,"level":..,"rho":[...]}; level must identify a
/// sphere_grid so the body can be reconstructed.
std::string star_body_to_json(const StarBody& K);
StarBody star_body_from_json(const std::string& json_text);

/// (node, weight, rho) rows.
std::string star_body_to_csv(const StarBody& K);

/// (node, gauge, rho) rows.
std::string proj_body_to_csv(const ProjBodyResult& body);

/// (radius, value) rows.
std::string radial_profile_to_csv(const RadialProfile& profile);

}  // namespace fracbody
