#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qloop/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"generalized quantum groups of quivers with loops"};
    app.require_subcommand(1);

    std::string quiver_path;
    int max_height = 4;
    int series_order = 20;
    std::uint64_t seed = 0;
    std::string format = "table";
    std::string out_path;
    std::string nu_default;

    app.add_option("--quiver", quiver_path, "quiver file")->required();
    app.add_option("--max-height", max_height, "session height cutoff");
    app.add_option("--series-order", series_order, "Laurent window order");
    app.add_option("--nu-default", nu_default, "fallback nu expression");
    app.add_option("--seed", seed, "seed for randomized diagnostics");
    app.add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--out", out_path, "write records to a file instead of stdout");

    const std::vector<std::string> commands = {
        "dims",       "gram",      "radical",    "serre-check", "iso-comm-check",
        "primitive",  "delta-comp", "straighten", "hopf-check",  "theta",
        "theta-check", "casimir-check", "f-check", "verify-all"};

    // Free-form per-command options are collected as key/value pairs.
    std::map<std::string, std::map<std::string, std::string>> cmd_args;
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->fallthrough();  // global flags may follow the subcommand
        auto& store = cmd_args[name];
        sub->add_option("--degree", store["degree"], "dimension vector");
        sub->add_option("--vertex", store["vertex"], "vertex name");
        sub->add_option("--level", store["level"], "generator level");
        sub->add_option("--comp", store["comp"], "composition, e.g. 2,1");
        sub->add_option("--side", store["side"], "lower|upper");
        sub->add_option("--expr", store["expr"], "element expression");
        sub->add_option("--p", store["p"], "theta truncation height");
        sub->add_option("--alpha", store["alpha"], "highest weight");
        sub->add_option("--depth", store["depth"], "verma depth");
        sub->add_option("--max-height", store["max-height"], "per-command height bound");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        qloop::SessionConfig cfg;
        cfg.quiver = qloop::QuiverSpec::parse_file(quiver_path);
        if (!nu_default.empty()) cfg.quiver.set_nu_default(qloop::Scalar::parse(nu_default));
        cfg.max_height = max_height;
        cfg.series_order = series_order;
        cfg.random_seed = seed;
        cfg.json = format == "json";

        CLI::App* sub = app.get_subcommands().front();
        qloop::CommandArgs args;
        for (const auto& [key, value] : cmd_args[sub->get_name()])
            if (!value.empty()) args[key] = value;

        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                std::cerr << "error: cannot open output file '" << out_path << "'\n";
                return 2;
            }
            out = &file;
        }
        return qloop::run_command(cfg, sub->get_name(), args, *out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
