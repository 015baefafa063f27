#include "cli_config.hpp"

#include "fracbody/params.hpp"
#include "fracbody/report_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fracbody::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string> kCommands = {"projbody", "chain", "ps",     "asym",
                                         "optimal",  "limits", "riesz", "selftest"};

const std::set<std::string> kKnownKeys = {
    "command",        "field",          "fields",           "n",
    "s",              "p",              "s_list",           "variant",
    "sphere_level",   "box_half_extent", "box_points",      "t_min",
    "t_max",          "t_points",       "oracle_points",    "measure_points",
    "rearrange_levels", "candidates",   "seed",             "tolerance",
    "out",            "formats",        "threads"};

FieldSpec field_from_config(int n, double s, const Json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "gaussian") return FieldSpec::gaussian(n, 1.0);
        if (name == "ball" || name == "ball_indicator")
            return FieldSpec::ball_indicator(n, 1.0);
        if (name == "bump") return FieldSpec::bump(n, 1.0);
        if (name == "bubble") return FieldSpec::bubble(n, s);
        throw std::invalid_argument("unknown field shorthand '" + name + "'");
    }
    Json full = j;
    if (!full.contains("n")) full["n"] = n;
    return field_from_json(full.dump());
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

std::string RunConfig::canonical_json() const {
    Json j;
    j["command"] = command;
    Json jf = Json::array();
    for (const auto& f : fields) jf.push_back(Json::parse(field_to_json(f)));
    j["fields"] = jf;
    j["n"] = n;
    j["s"] = s;
    j["p"] = p;
    j["s_list"] = s_list;
    j["variant"] = variant;
    j["sphere_level"] = sphere_level;
    j["box_half_extent"] = box_half_extent;
    j["box_points"] = box_points;
    j["t_min"] = t_min;
    j["t_max"] = t_max;
    j["t_points"] = t_points;
    j["oracle_points"] = oracle_points;
    j["measure_points"] = measure_points;
    j["rearrange_levels"] = rearrange_levels;
    j["candidates"] = candidates;
    j["seed"] = seed;
    j["tolerance"] = tolerance;
    j["threads"] = threads;
    return j.dump();
}

std::string RunConfig::artifact_stem() const {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(canonical_json())));
    return command + "-" + buf;
}

RunConfig parse_config(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!kKnownKeys.count(key))
            throw std::invalid_argument("unknown config key '" + key + "'");
    }

    RunConfig cfg;
    if (!j.contains("command"))
        throw std::invalid_argument("config missing required key 'command'");
    cfg.command = j["command"].get<std::string>();

    if (j.contains("n")) cfg.n = j["n"].get<int>();
    if (j.contains("s")) cfg.s = j["s"].get<double>();
    if (j.contains("p")) cfg.p = j["p"].get<double>();
    if (j.contains("s_list")) cfg.s_list = j["s_list"].get<std::vector<double>>();
    if (j.contains("variant")) cfg.variant = j["variant"].get<std::string>();
    if (j.contains("sphere_level")) cfg.sphere_level = j["sphere_level"].get<int>();
    if (j.contains("box_half_extent"))
        cfg.box_half_extent = j["box_half_extent"].get<double>();
    if (j.contains("box_points")) cfg.box_points = j["box_points"].get<int>();
    if (j.contains("t_min")) cfg.t_min = j["t_min"].get<double>();
    if (j.contains("t_max")) cfg.t_max = j["t_max"].get<double>();
    if (j.contains("t_points")) cfg.t_points = j["t_points"].get<int>();
    if (j.contains("oracle_points")) cfg.oracle_points = j["oracle_points"].get<int>();
    if (j.contains("measure_points"))
        cfg.measure_points = j["measure_points"].get<int>();
    if (j.contains("rearrange_levels"))
        cfg.rearrange_levels = j["rearrange_levels"].get<int>();
    if (j.contains("candidates")) cfg.candidates = j["candidates"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tolerance")) cfg.tolerance = j["tolerance"].get<double>();
    if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    if (j.contains("formats")) {
        cfg.json_out = cfg.csv_out = false;
        for (const auto& fmt : j["formats"]) {
            const std::string name = fmt.get<std::string>();
            if (name == "json")
                cfg.json_out = true;
            else if (name == "csv")
                cfg.csv_out = true;
            else
                throw std::invalid_argument("unknown output format '" + name + "'");
        }
    }

    if (j.contains("field") && j.contains("fields"))
        throw std::invalid_argument("config has both 'field' and 'fields'");
    if (j.contains("field")) {
        const Json& jf = j["field"];
        if (jf.is_array())
            for (const auto& item : jf) cfg.fields.push_back(field_from_config(cfg.n, cfg.s, item));
        else
            cfg.fields.push_back(field_from_config(cfg.n, cfg.s, jf));
    }
    if (j.contains("fields"))
        for (const auto& item : j["fields"])
            cfg.fields.push_back(field_from_config(cfg.n, cfg.s, item));

    finalize_config(cfg);
    return cfg;
}

void finalize_config(RunConfig& cfg) {
    if (!kCommands.count(cfg.command))
        throw std::invalid_argument("unknown command '" + cfg.command + "'");
    if (cfg.command != "selftest" && cfg.command != "riesz" && cfg.fields.empty())
        cfg.fields.push_back(FieldSpec::gaussian(cfg.n, 1.0));
    for (const auto& f : cfg.fields)
        if (f.dim() != cfg.n)
            throw std::invalid_argument("field dimension does not match config n");

    // parameter block validation (limits sweeps check s_list entries instead)
    if (cfg.command == "limits") {
        if (cfg.s_list.empty()) cfg.s_list = {0.5, 0.7, 0.9, 0.95};
        if (!std::is_sorted(cfg.s_list.begin(), cfg.s_list.end()))
            throw std::invalid_argument("s_list must be increasing");
        for (double s : cfg.s_list)
            FracParams::for_limit_sweep(cfg.n, s, cfg.p);  // throws on bad values
    } else if (cfg.command != "selftest") {
        validate_params(cfg.n, cfg.s, cfg.p);
    }

    if (cfg.variant != "sym" && cfg.variant != "plus" && cfg.variant != "minus")
        throw std::invalid_argument("variant must be sym, plus or minus");
    if (!(cfg.tolerance > 0.0))
        throw std::invalid_argument("tolerance must be > 0");
    if (cfg.candidates < 1) throw std::invalid_argument("candidates must be >= 1");
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("--set expects key=value, got '" + assignment + "'");
    const std::string key = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);
    auto as_int = [&] { return std::stoi(value); };
    auto as_double = [&] { return std::stod(value); };

    if (key == "command") cfg.command = value;
    else if (key == "n") cfg.n = as_int();
    else if (key == "s") cfg.s = as_double();
    else if (key == "p") cfg.p = as_double();
    else if (key == "variant") cfg.variant = value;
    else if (key == "sphere_level") cfg.sphere_level = as_int();
    else if (key == "box_half_extent") cfg.box_half_extent = as_double();
    else if (key == "box_points") cfg.box_points = as_int();
    else if (key == "t_min") cfg.t_min = as_double();
    else if (key == "t_max") cfg.t_max = as_double();
    else if (key == "t_points") cfg.t_points = as_int();
    else if (key == "oracle_points") cfg.oracle_points = as_int();
    else if (key == "measure_points") cfg.measure_points = as_int();
    else if (key == "rearrange_levels") cfg.rearrange_levels = as_int();
    else if (key == "candidates") cfg.candidates = as_int();
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(std::stoull(value));
    else if (key == "tolerance") cfg.tolerance = as_double();
    else if (key == "out") cfg.out_dir = value;
    else if (key == "threads") cfg.threads = as_int();
    else if (key == "field")
        cfg.fields = {field_from_config(cfg.n, cfg.s, Json(value))};
    else
        throw std::invalid_argument("unknown override key '" + key + "'");
}

}  // namespace fracbody::cli
