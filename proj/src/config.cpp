#include "ccdyn/config.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "ccdyn/effective.hpp"
#include "ccdyn/exact.hpp"
#include "ccdyn/oracle.hpp"

namespace ccdyn {

BackendKind backend_from_string(const std::string& name) {
    if (name == "exact") return BackendKind::Exact;
    if (name == "oracle") return BackendKind::Oracle;
    if (name == "dispersive") return BackendKind::Dispersive;
    if (name == "resonant") return BackendKind::Resonant;
    if (name == "near-resonant") return BackendKind::NearResonant;
    throw std::invalid_argument("unknown model: " + name);
}

std::string to_string(BackendKind kind) {
    switch (kind) {
        case BackendKind::Exact: return "exact";
        case BackendKind::Oracle: return "oracle";
        case BackendKind::Dispersive: return "dispersive";
        case BackendKind::Resonant: return "resonant";
        case BackendKind::NearResonant: return "near-resonant";
    }
    return "unknown";
}

InitState InitState::parse(const std::string& text) {
    InitState s;
    if (text == "atom1") {
        s.kind = Kind::Atom1;
    } else if (text == "atom2") {
        s.kind = Kind::Atom2;
    } else if (text == "cavity1") {
        s.kind = Kind::Cavity1;
    } else if (text == "cavity2") {
        s.kind = Kind::Cavity2;
    } else {
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument(
                "init must be a named state (atom1, atom2, cavity1, cavity2) or "
                "\"theta,phi\"");
        }
        double theta = 0.0, phi = 0.0;
        try {
            std::size_t used1 = 0, used2 = 0;
            theta = std::stod(text.substr(0, comma), &used1);
            const std::string rest = text.substr(comma + 1);
            phi = std::stod(rest, &used2);
            if (used1 != comma || used2 != rest.size()) {
                throw std::invalid_argument("");
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed theta,phi init: " + text);
        }
        const QubitState q(theta, phi);  // validates ranges
        s.kind = Kind::Qubit;
        s.theta = q.theta;
        s.phi = q.phi;
    }
    return s;
}

LocalAmplitudes InitState::amplitudes() const {
    switch (kind) {
        case Kind::Atom1: return {0.0, 0.0, 1.0, 0.0};
        case Kind::Atom2: return {0.0, 0.0, 0.0, 1.0};
        case Kind::Cavity1: return {1.0, 0.0, 0.0, 0.0};
        case Kind::Cavity2: return {0.0, 1.0, 0.0, 0.0};
        case Kind::Qubit: return QubitState(theta, phi).initial_amplitudes();
    }
    throw std::logic_error("InitState: bad kind");
}

std::string InitState::describe() const {
    switch (kind) {
        case Kind::Atom1: return "atom1";
        case Kind::Atom2: return "atom2";
        case Kind::Cavity1: return "cavity1";
        case Kind::Cavity2: return "cavity2";
        case Kind::Qubit:
            return std::to_string(theta) + "," + std::to_string(phi);
    }
    return "unknown";
}

void SimulationConfig::validate() const {
    if (samples < 2) throw std::invalid_argument("samples must be >= 2");
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
        throw std::invalid_argument("t-max must be finite and >= 0");
    }
    if (!std::isfinite(params.g) || !std::isfinite(params.hopping) ||
        !std::isfinite(params.detuning) || !std::isfinite(params.omega_f)) {
        throw std::invalid_argument("parameters must be finite");
    }
}

nlohmann::ordered_json SimulationConfig::to_json() const {
    nlohmann::ordered_json j;
    j["model"] = ccdyn::to_string(model);
    j["g"] = params.g;
    j["hopping"] = params.hopping;
    j["detuning"] = params.detuning;
    j["omega_f"] = params.omega_f;
    j["init"] = init.describe();
    j["t_max"] = t_max;
    j["samples"] = samples;
    j["format"] = format == OutputFormat::Csv ? "csv" : "json";
    return j;
}

SimulationConfig SimulationConfig::from_json(const nlohmann::json& j) {
    SimulationConfig c;
    c.model = backend_from_string(j.at("model").get<std::string>());
    c.params.g = j.at("g").get<double>();
    c.params.hopping = j.at("hopping").get<double>();
    c.params.detuning = j.at("detuning").get<double>();
    c.params.omega_f = j.at("omega_f").get<double>();
    c.init = InitState::parse(j.at("init").get<std::string>());
    c.t_max = j.at("t_max").get<double>();
    c.samples = j.at("samples").get<int>();
    c.format = j.at("format").get<std::string>() == "json" ? OutputFormat::Json
                                                           : OutputFormat::Csv;
    c.validate();
    return c;
}

AmplitudeFn make_backend(BackendKind kind, const SystemParams& params,
                         const LocalAmplitudes& init) {
    switch (kind) {
        case BackendKind::Exact: {
            return [prop = ExactPropagator(params), init](double t) {
                return prop.evolve_local(init, t);
            };
        }
        case BackendKind::Oracle: {
            auto prop = std::make_shared<EigenPropagator>(
                single_excitation_hamiltonian(params));
            return [prop, v = Eigen::Vector4cd(to_vector(init))](double t) {
                return from_vector(prop->evolve(v, t));
            };
        }
        case BackendKind::Dispersive: {
            return [model = RegimeModel::dispersive(params), init](double t) {
                return evolve_dispersive(model, init, t);
            };
        }
        case BackendKind::Resonant:
        case BackendKind::NearResonant: {
            if (init.a != Complex{} || init.b != Complex{} || init.d != Complex{}) {
                throw RegimeError(
                    "resonant and near-resonant models require the initial "
                    "excitation in atom 1");
            }
            if (kind == BackendKind::Resonant) {
                return [model = RegimeModel::resonant(params), c0 = init.c](double t) {
                    return evolve_resonant(model, c0, t);
                };
            }
            return [model = RegimeModel::near_resonant(params), c0 = init.c](double t) {
                return evolve_near_resonant(model, c0, t);
            };
        }
    }
    throw std::logic_error("make_backend: bad kind");
}

AmplitudeFn make_backend(const SimulationConfig& config) {
    return make_backend(config.model, config.params, config.init.amplitudes());
}

}  // namespace ccdyn
