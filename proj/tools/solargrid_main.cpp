#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "solargrid/config.hpp"
#include "solargrid/errors.hpp"
#include "solargrid/fixture.hpp"
#include "solargrid/optimizer.hpp"
#include "solargrid/pipeline.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
    CLI::App app{"solargrid - longitudinally-distributed solar grid simulator and optimizer"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    int experiment = 0;

    auto* run = app.add_subcommand("run", "simulate, optimize and write CSV outputs");
    run->add_option("--config", config_path, "scenario config file")->required();
    run->add_option("--experiment", experiment, "run only this experiment (1..4)")
        ->check(CLI::Range(1, 4));
    run->add_option("--out", out_dir, "output directory (default: config output_dir)");

    auto* validate = app.add_subcommand("validate-config", "parse and validate a config file");
    validate->add_option("config", config_path, "scenario config file")->required();

    auto* dump = app.add_subcommand("lp-dump", "print the LP of one experiment as plain text");
    dump->add_option("--config", config_path, "scenario config file")->required();
    dump->add_option("--experiment", experiment, "experiment number (1..4)")
        ->required()
        ->check(CLI::Range(1, 4));

    auto* gen = app.add_subcommand("gen-fixture",
                                   "write the bundled ten-location demo scenario");
    gen->add_option("--out", out_dir, "target directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const fs::path cfg = solargrid::write_fixture_scenario(out_dir);
            std::cout << "wrote " << cfg.string() << "\n";
            return solargrid::kExitOk;
        }

        solargrid::ScenarioConfig cfg = solargrid::load_config(config_path);

        if (validate->parsed()) {
            std::cout << "OK: " << config_path << " (" << cfg.locations.size()
                      << " locations, " << cfg.experiments.size() << " experiments)\n";
            return solargrid::kExitOk;
        }

        if (run->parsed()) {
            if (experiment > 0)
                cfg.experiments = {solargrid::ExperimentSpec{
                    experiment, solargrid::experiment_policy(experiment)}};
            const fs::path out = out_dir.empty() ? fs::path(cfg.output_dir) : fs::path(out_dir);
            const int code = solargrid::run_pipeline(cfg, out, std::cerr);
            if (code == solargrid::kExitOk)
                std::cout << "ok: outputs written to " << out.string() << "\n";
            return code;
        }

        if (dump->parsed()) {
            const auto result = solargrid::simulate_and_optimize([&] {
                solargrid::ScenarioConfig c = cfg;
                c.experiments.clear();  // matrices only; LP built below
                return c;
            }());
            const auto lp = solargrid::build_lp(result.matrices,
                                                solargrid::experiment_policy(experiment),
                                                cfg.panel.unit_area);
            std::cout << solargrid::lp_dump(lp);
            return solargrid::kExitOk;
        }
    } catch (const solargrid::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return solargrid::kExitConfigError;
    } catch (const solargrid::WeatherError& e) {
        std::cerr << "weather error: " << e.what() << "\n";
        return solargrid::kExitWeatherError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
