#include "radmax/acceptance.hpp"
#include "radmax/config.hpp"
#include "radmax/errors.hpp"
#include "radmax/experiments.hpp"
#include "radmax/thread_pool.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int run_one_experiment(const std::string& kind, const std::string& config_path,
                       std::uint64_t seed, bool seed_given, const std::string& out,
                       int threads) {
    radmax::ExperimentConfig cfg;
    if (!config_path.empty()) {
        cfg = radmax::load_config(config_path);
        if (cfg.kind != kind)
            throw radmax::ConfigError("config file declares experiment '" + cfg.kind +
                                      "' but the command line asked for '" + kind +
                                      "'");
    } else {
        cfg.kind = kind;
        cfg.params = nlohmann::json::object();
        cfg.params["experiment"] = kind;
        if (kind == "growth" || kind == "dimlimit" || kind == "a1-sweep" ||
            kind == "weaktype" || kind == "thm42")
            throw radmax::ConfigError("experiment '" + kind +
                                      "' needs a config file (--config)");
    }
    if (seed_given) {
        cfg.seed = seed;
        cfg.has_seed = true;
    }
    if (!out.empty()) cfg.out_path = out;
    if (threads > 0) cfg.threads = threads;

    const std::string path =
        cfg.out_path.empty() ? cfg.kind + ".csv" : cfg.out_path;
    std::ofstream os(path);
    if (!os) throw radmax::ConfigError("cannot open output file '" + path + "'");
    const auto outcome = radmax::run_experiment(cfg, os);
    std::cout << outcome.summary << " -> " << path << "\n";
    return outcome.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"radmax: radial weighted maximal-operator laboratory"};
    app.require_subcommand(1);

    std::string config_path, out_path, filter;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int threads = 0;

    auto add_common = [&](CLI::App* sub, bool with_config = true) {
        if (with_config)
            sub->add_option("--config", config_path, "experiment config file (JSON)");
        sub->add_option("--seed", seed, "seed override for randomized suites")
            ->each([&](const std::string&) { seed_given = true; });
        sub->add_option("--out", out_path, "output CSV path");
        sub->add_option("--threads", threads,
                        "worker threads (default: RADMAX_THREADS or hardware)");
    };

    for (const auto& kind : radmax::experiment_kinds())
        add_common(app.add_subcommand(kind, "run the '" + kind + "' experiment"));

    auto* accept = app.add_subcommand("accept", "run the acceptance suite");
    accept->add_option("--filter", filter, "run only criteria whose id matches");
    accept->add_option("--threads", threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& kind : radmax::experiment_kinds())
            if (app.got_subcommand(kind))
                return run_one_experiment(kind, config_path, seed, seed_given,
                                          out_path, threads);
        if (app.got_subcommand("accept")) {
            const auto results = radmax::run_acceptance(
                filter, radmax::resolve_threads(threads), std::cout);
            return radmax::all_passed(results) ? 0 : 1;
        }
    } catch (const radmax::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
