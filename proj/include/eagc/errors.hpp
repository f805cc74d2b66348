#pragma once

#include <stdexcept>
#include <string>

namespace eagc {

/// Base class for all failures raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scenario-document failures. One subclass per category so callers can map
/// them onto distinct exit codes without string matching.
struct ScenarioError : Error {
    using Error::Error;
};

/// File missing or unreadable.
struct ScenarioIoError : ScenarioError {
    using ScenarioError::ScenarioError;
};

/// Document is not well-formed (JSON-level).
struct ScenarioSyntaxError : ScenarioError {
    using ScenarioError::ScenarioError;
};

/// Document is well-formed but violates the schema (missing/ill-typed field,
/// out-of-range value).
struct ScenarioSchemaError : ScenarioError {
    using ScenarioError::ScenarioError;
};

/// A cross-reference (bus, generator, load, area id) does not resolve.
struct ScenarioReferenceError : ScenarioError {
    using ScenarioError::ScenarioError;
};

/// LQR weight matrices are not positive definite.
struct ScenarioWeightError : ScenarioError {
    using ScenarioError::ScenarioError;
};

/// A run failed at runtime: non-finite derivative or state escape.
/// Carries the simulation time at which the failure was detected.
class SimulationError : public Error {
public:
    SimulationError(double time, const std::string& what)
        : Error("t=" + std::to_string(time) + " s: " + what), time_(time) {}

    double time() const { return time_; }

private:
    double time_;
};

/// Result emission failed (unwritable directory, disk error).
struct OutputError : Error {
    using Error::Error;
};

}  // namespace eagc
