#pragma once

#include <string>

#include <json.hpp>

#include "ccdyn/params.hpp"
#include "ccdyn/series.hpp"

namespace ccdyn {

enum class BackendKind { Exact, Oracle, Dispersive, Resonant, NearResonant };

BackendKind backend_from_string(const std::string& name);
std::string to_string(BackendKind kind);

/// Initial state: a named single-excitation basis state or a qubit
/// superposition (theta, phi) loaded into atom 1.
struct InitState {
    enum class Kind { Atom1, Atom2, Cavity1, Cavity2, Qubit };

    Kind kind = Kind::Atom1;
    double theta = 0.0;
    double phi = 0.0;

    static InitState parse(const std::string& text);
    LocalAmplitudes amplitudes() const;
    std::string describe() const;
};

enum class OutputFormat { Csv, Json };

struct SimulationConfig {
    SystemParams params;
    BackendKind model = BackendKind::Oracle;
    InitState init;
    double t_max = 0.0;
    int samples = 1000;
    OutputFormat format = OutputFormat::Csv;

    /// Throws std::invalid_argument on malformed configs (samples < 2,
    /// negative t_max, non-finite parameters).
    void validate() const;

    nlohmann::ordered_json to_json() const;
    static SimulationConfig from_json(const nlohmann::json& j);
};

/// Bind the configured backend and initial state into a t -> amplitudes
/// function. Throws DomainError subtypes on regime misuse (for example a
/// dispersive model at delta2 = 0, or a resonant model with an initial
/// state that is not a pure atom-1 excitation).
AmplitudeFn make_backend(const SimulationConfig& config);
AmplitudeFn make_backend(BackendKind kind, const SystemParams& params,
                         const LocalAmplitudes& init);

}  // namespace ccdyn
