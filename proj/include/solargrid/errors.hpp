#ifndef SOLARGRID_ERRORS_HPP
#define SOLARGRID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solargrid {

// Weather file errors -------------------------------------------------------

/// Required column missing or header structure wrong.
struct MalformedHeader : std::runtime_error {
    explicit MalformedHeader(const std::string& msg) : std::runtime_error(msg) {}
};

/// File does not contain exactly 8760 data rows.
struct RowCountMismatch : std::runtime_error {
    RowCountMismatch(long expected, long actual)
        : std::runtime_error("expected " + std::to_string(expected) +
                             " data rows, found " + std::to_string(actual)),
          expected(expected), actual(actual) {}
    long expected;
    long actual;
};

/// A field violates the physical plausibility bounds (sentinel values such as
/// -9900 land here too). `row` is the 1-based data row index.
struct ValueOutOfRange : std::runtime_error {
    ValueOutOfRange(long row, const std::string& msg)
        : std::runtime_error("data row " + std::to_string(row) + ": " + msg),
          row(row) {}
    long row;
};

struct DateNotFound : std::runtime_error {
    explicit DateNotFound(const std::string& msg) : std::runtime_error(msg) {}
};

// Simulation errors ----------------------------------------------------------

/// Thermal integration produced a non-finite temperature. Signals parameters
/// outside the stable range; never silently clamped.
struct NonFiniteState : std::runtime_error {
    explicit NonFiniteState(const std::string& msg) : std::runtime_error(msg) {}
};

struct TraceLengthMismatch : std::runtime_error {
    explicit TraceLengthMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

// Optimizer errors ----------------------------------------------------------

struct EmptyScenario : std::runtime_error {
    EmptyScenario() : std::runtime_error("scenario has no locations") {}
};

/// Pivot count exceeded the safety bound; indicates numerical trouble.
struct IterationLimit : std::runtime_error {
    explicit IterationLimit(long limit)
        : std::runtime_error("simplex exceeded " + std::to_string(limit) + " pivots"),
          limit(limit) {}
    long limit;
};

// Storage errors -------------------------------------------------------------

/// Location has no solar production in the simulated day; cannot self-power.
struct ZeroProduction : std::runtime_error {
    explicit ZeroProduction(const std::string& msg) : std::runtime_error(msg) {}
};

// Pipeline errors ------------------------------------------------------------

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Weather-input failure wrapped with the location context by the pipeline.
struct WeatherError : std::runtime_error {
    explicit WeatherError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace solargrid

#endif
