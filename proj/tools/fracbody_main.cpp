#include "cli_config.hpp"
#include "cli_run.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional polar projection bodies: builders, inequality reports, limits"};

    std::string config_path, command, out_dir;
    int threads = -1;
    long long seed = -1;
    double tolerance = -1.0;
    std::vector<std::string> overrides;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--command", command,
                   "projbody|chain|ps|asym|optimal|limits|riesz|selftest");
    app.add_option("--out", out_dir, "output directory for artifacts");
    app.add_option("--threads", threads, "worker thread cap (env FRACBODY_THREADS)");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--tolerance", tolerance, "default assertion tolerance");
    app.add_option("--set", overrides, "per-key override key=value (repeatable)");

    CLI11_PARSE(app, argc, argv);

    fracbody::cli::RunConfig cfg;
    try {
        if (!config_path.empty()) {
            cfg = fracbody::cli::parse_config(read_file(config_path));
        } else if (!command.empty()) {
            cfg = fracbody::cli::parse_config("{\"command\":\"" + command + "\"}");
            command.clear();
        } else {
            std::cerr << "error: need --config or --command\n";
            return 2;
        }
        if (!command.empty()) cfg.command = command;
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (threads >= 0) cfg.threads = threads;
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        if (tolerance > 0.0) cfg.tolerance = tolerance;
        for (const auto& o : overrides) fracbody::cli::apply_override(cfg, o);
        fracbody::cli::finalize_config(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        return fracbody::cli::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 3;
    }
}
