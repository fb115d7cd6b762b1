#ifndef SOLARGRID_PIPELINE_HPP
#define SOLARGRID_PIPELINE_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "solargrid/config.hpp"
#include "solargrid/optimizer.hpp"
#include "solargrid/scenario.hpp"
#include "solargrid/storage.hpp"

namespace solargrid {

// Exit codes of the `run` pipeline (and the CLI).
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitWeatherError = 3,
    kExitInfeasible = 4,
    kExitValidationFailure = 5,
};

struct LocationResult {
    ConsumptionTrace consumption;
    ProductionTrace production;
    long long households = 0;
    bool households_derived = false;  // true when taken as population/3
};

struct ExperimentResult {
    ExperimentSpec spec;
    LPProblem lp;
    LPSolution solution;
    ValidationReport validation;
};

struct PipelineResult {
    std::vector<LocationResult> locations;
    ScenarioMatrices matrices;
    std::vector<ExperimentResult> experiments;
    std::vector<StorageReportRow> storage;
    std::vector<std::string> warnings;
};

/// Simulate every location (in parallel), assemble the matrices, solve and
/// validate each selected experiment, and estimate no-grid storage. Throws
/// the module-specific errors; use run_pipeline for exit-code mapping.
PipelineResult simulate_and_optimize(const ScenarioConfig& cfg);

/// Write hourly_totals.csv, scale_factors_<tag>.csv per experiment,
/// storage_report.csv and run_report.txt under out_dir.
void write_outputs(const PipelineResult& result, const ScenarioConfig& cfg,
                   const std::filesystem::path& out_dir);

/// Human-readable run summary (the run_report.txt content).
std::string report_summary(const PipelineResult& result, const ScenarioConfig& cfg);

/// Full pipeline with diagnostics to `diag`; returns an ExitCode. Exit is 0
/// iff every selected experiment solves to optimality and validates.
int run_pipeline(const ScenarioConfig& cfg, const std::filesystem::path& out_dir,
                 std::ostream& diag);

}  // namespace solargrid

#endif
