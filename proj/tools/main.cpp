#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempsub/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw CLI::ValidationError("--config", "cannot read config file " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tempered-subordinator toolkit: rate functions, samplers, and the"
                 " Monte Carlo verification harness"};
    app.require_subcommand(1);

    struct Common {
        std::string config_path;
        std::uint64_t seed = 0;
        bool has_seed = false;
        std::string out;
    };

    std::map<std::string, Common> opts;
    for (const char* name : {"rate", "conjugate", "mlf", "simulate", "verify", "timechange"}) {
        auto* sub = app.add_subcommand(name);
        auto& c = opts[name];
        sub->add_option("--config", c.config_path, "JSON config file");
        sub->add_option("--seed", c.seed, "RNG seed (overrides config)")
            ->each([&c](const std::string&) { c.has_seed = true; });
        sub->add_option("--out", c.out, "output path (overrides config; - for stdout)");
    }

    // point evaluation flags for mlf, merged into the config
    double mlf_gamma = 0.0, mlf_x = 0.0, mlf_y = 0.0, mlf_lambda = 1.0;
    bool has_gamma = false, has_x = false, curve = false;
    std::vector<double> mlf_t;
    auto* mlf_cmd = app.get_subcommand("mlf");
    mlf_cmd->add_option("--gamma", mlf_gamma, "Mittag-Leffler order")
        ->each([&](const std::string&) { has_gamma = true; });
    mlf_cmd->add_option("--x", mlf_x, "argument for a point evaluation")
        ->each([&](const std::string&) { has_x = true; });
    mlf_cmd->add_flag("--curve", curve, "emit the (1/t) log E curve instead of a point");
    mlf_cmd->add_option("--y", mlf_y, "curve mode: MGF argument");
    mlf_cmd->add_option("--lambda", mlf_lambda, "curve mode: intensity");
    mlf_cmd->add_option("--t", mlf_t, "curve mode: time grid");

    CLI11_PARSE(app, argc, argv);

    const std::string cmd = app.get_subcommands().front()->get_name();
    const Common& c = opts[cmd];

    tempsub::cli::Request req;
    req.command = cmd;
    try {
        req.config_json = c.config_path.empty() ? "{}" : slurp(c.config_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    }
    if (c.has_seed) req.seed_override = c.seed;
    if (!c.out.empty()) req.out_override = c.out;

    if (cmd == "mlf" && (has_gamma || has_x || curve)) {
        nlohmann::json cfg = nlohmann::json::parse(req.config_json);
        if (has_gamma) cfg["gamma"] = mlf_gamma;
        if (curve) {
            cfg["curve"] = {{"y", mlf_y}, {"lambda", mlf_lambda}, {"t", mlf_t}};
        } else if (has_x) {
            cfg["x"] = mlf_x;
        }
        req.config_json = cfg.dump();
    }

    return tempsub::cli::run(req, std::cerr);
}
