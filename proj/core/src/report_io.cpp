#include "fracbody/report_io.hpp"

#include "json.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fracbody {

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> vec_to_list(const Vec& v, int n) {
    return std::vector<double>(v.begin(), v.begin() + n);
}

Json affine_to_json(const AffineMap& a) {
    Json j;
    Json matrix = Json::array();
    for (int i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < a.dim(); ++k) row.push_back(a.entry(i, k));
        matrix.push_back(row);
    }
    j["matrix"] = matrix;
    j["translation"] = vec_to_list(a.translation(), a.dim());
    return j;
}

AffineMap affine_from_json(int n, const Json& j) {
    std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
    const auto& rows = j.at("matrix");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("affine: matrix row count mismatch");
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(i) * n + k] = rows[i][k];
    double tr[3] = {0.0, 0.0, 0.0};
    if (j.contains("translation")) {
        const auto& t = j["translation"];
        for (int i = 0; i < n && i < static_cast<int>(t.size()); ++i) tr[i] = t[i];
    }
    return AffineMap(n, m.data(), tr);
}

Json term_to_json(const FieldTerm& t, int n) {
    Json j;
    j["kind"] = to_string(t.kind);
    switch (t.kind) {
        case FieldKind::Gaussian: j["width"] = t.radius; break;
        case FieldKind::Bubble: j["s"] = t.radius; break;
        case FieldKind::RadialProfile:
            j["radii"] = t.profile_radii;
            j["values"] = t.profile_values;
            break;
        default: j["radius"] = t.radius; break;
    }
    if (t.kind != FieldKind::Bubble && t.kind != FieldKind::RadialProfile)
        j["center"] = vec_to_list(t.center, n);
    j["scale"] = t.scale;
    if (t.affine) j["affine"] = affine_to_json(*t.affine);
    return j;
}

FieldTerm term_from_json(int n, const Json& j) {
    FieldTerm t;
    t.kind = field_kind_from_string(j.at("kind").get<std::string>());
    switch (t.kind) {
        case FieldKind::Gaussian: t.radius = j.at("width").get<double>(); break;
        case FieldKind::Bubble: t.radius = j.at("s").get<double>(); break;
        case FieldKind::RadialProfile:
            t.profile_radii = j.at("radii").get<std::vector<double>>();
            t.profile_values = j.at("values").get<std::vector<double>>();
            break;
        default: t.radius = j.at("radius").get<double>(); break;
    }
    if (j.contains("center")) {
        const auto c = j["center"].get<std::vector<double>>();
        for (int i = 0; i < n && i < static_cast<int>(c.size()); ++i) t.center[i] = c[i];
    }
    if (j.contains("scale")) t.scale = j["scale"].get<double>();
    if (j.contains("affine")) t.affine = affine_from_json(n, j["affine"]);
    return t;
}

}  // namespace

std::string report_to_json(const Report& report) {
    Json j;
    j["kind"] = report.kind;
    Json inputs;
    for (const auto& [k, v] : report.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    Json scalars;
    for (const auto& [k, v] : report.scalars) scalars[k] = v;
    j["scalars"] = scalars;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        jc["relation"] = c.relation;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        jc["margin"] = c.margin;
        jc["asserted"] = c.asserted;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    if (!report.table.empty()) {
        j["table_header"] = report.table_header;
        j["table"] = report.table;
    }
    j["all_pass"] = report.all_pass();
    return j.dump(2) + "\n";
}

std::string report_meta_to_json(const Report& report) {
    Json j;
    j["kind"] = report.kind;
    Json timings;
    double total = 0.0;
    for (const auto& [k, v] : report.timings) {
        timings[k] = v;
        total += v;
    }
    j["stage_seconds"] = timings;
    j["total_seconds"] = total;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& report) {
    std::ostringstream os;
    if (!report.table.empty()) {
        for (std::size_t i = 0; i < report.table_header.size(); ++i)
            os << (i ? "," : "") << report.table_header[i];
        os << "\r\n";
        for (const auto& row : report.table) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << format_double(row[i]);
            os << "\r\n";
        }
        return os.str();
    }
    os << "record,name,lhs,rhs,relation,tolerance,pass,margin\r\n";
    for (const auto& [k, v] : report.scalars)
        os << "scalar," << k << "," << format_double(v) << ",,,,,\r\n";
    for (const auto& c : report.checks)
        os << "check," << c.name << "," << format_double(c.lhs) << ","
           << format_double(c.rhs) << "," << c.relation << ","
           << format_double(c.tolerance) << "," << (c.pass ? 1 : 0) << ","
           << format_double(c.margin) << "\r\n";
    return os.str();
}

std::string field_to_json(const FieldSpec& f) {
    Json j;
    j["n"] = f.dim();
    Json terms = Json::array();
    for (const auto& t : f.terms()) terms.push_back(term_to_json(t, f.dim()));
    j["terms"] = terms;
    return j.dump();
}

FieldSpec field_from_json(const std::string& json_text) {
    const Json j = Json::parse(json_text);
    const int n = j.at("n").get<int>();
    std::vector<FieldTerm> terms;
    if (j.contains("terms")) {
        for (const auto& jt : j["terms"]) terms.push_back(term_from_json(n, jt));
    } else {
        terms.push_back(term_from_json(n, j));  // single-term shorthand
    }
    return FieldSpec(n, std::move(terms));
}

std::string star_body_to_json(const StarBody& K) {
    Json j;
    j["n"] = K.grid->n;
    j["level"] = K.grid->level;
    j["rho"] = K.rho;
    return j.dump();
}

StarBody star_body_from_json(const std::string& json_text) {
    const Json j = Json::parse(json_text);
    const int n = j.at("n").get<int>();
    const int level = j.at("level").get<int>();
    auto grid = std::make_shared<SphereGrid>(sphere_grid(n, level));
    return StarBody(std::move(grid), j.at("rho").get<std::vector<double>>());
}

std::string star_body_to_csv(const StarBody& K) {
    std::ostringstream os;
    os << "node_x,node_y,node_z,weight,rho\r\n";
    for (std::size_t i = 0; i < K.rho.size(); ++i) {
        const Vec& v = K.grid->nodes[i];
        os << format_double(v[0]) << "," << format_double(v[1]) << ","
           << format_double(v[2]) << "," << format_double(K.grid->weights[i]) << ","
           << format_double(K.rho[i]) << "\r\n";
    }
    return os.str();
}

std::string proj_body_to_csv(const ProjBodyResult& body) {
    std::ostringstream os;
    os << "node_x,node_y,node_z,gauge,rho\r\n";
    for (std::size_t i = 0; i < body.gauge.size(); ++i) {
        const Vec& v = body.body.grid->nodes[i];
        os << format_double(v[0]) << "," << format_double(v[1]) << ","
           << format_double(v[2]) << "," << format_double(body.gauge[i]) << ","
           << format_double(body.body.rho[i]) << "\r\n";
    }
    return os.str();
}

std::string radial_profile_to_csv(const RadialProfile& profile) {
    std::ostringstream os;
    os << "radius,value\r\n";
    for (std::size_t i = 0; i < profile.radii.size(); ++i)
        os << format_double(profile.radii[i]) << ","
           << format_double(profile.values[i]) << "\r\n";
    return os.str();
}

}  // namespace fracbody
