#pragma once

#include <string>
#include <vector>

#include "ccdyn/amplitudes.hpp"
#include "ccdyn/params.hpp"

namespace ccdyn {

/// Fidelity |cos^2(theta) + sin^2(theta) T|^2 of the transferred qubit,
/// where T = d(t)/c(0) is the complex transfer amplitude from any
/// evolution backend.
double transfer_fidelity(const QubitState& qubit, Complex transfer_amplitude);

/// Snapshot of transfer quality at one instant.
struct TransferReport {
    double time = 0.0;
    double transfer_probability = 0.0;  // |T|^2
    double fidelity = 0.0;
    double phase_error = 0.0;  // arg(T) in (-pi, pi]
};

TransferReport assess_transfer(const QubitState& qubit, Complex transfer_amplitude,
                               double time);

/// Candidate dispersive transfer time tau_n = (2n + 1/2) pi / |G A|.
/// phase_ok reports whether the laboratory-frame phase accumulated at
/// tau_n also satisfies the perfect-transfer condition, with the nearest
/// integer m and the signed residual (in units of pi).
struct DispersiveTransferTime {
    int n = 0;
    double tau = 0.0;
    bool phase_ok = false;
    long long m = 0;
    double residual = 0.0;
};

std::vector<DispersiveTransferTime> dispersive_transfer_times(
    const SystemParams& p, int n_max, double tolerance = 1e-3);

/// Candidate resonant transfer time tau_n = (2n + 1) pi / g, plus the
/// omega_a = 2 l g phase condition.
struct ResonantTransferTime {
    int n = 0;
    double tau = 0.0;
    bool omega_ok = false;
    long long l = 0;
    double residual = 0.0;
};

std::vector<ResonantTransferTime> resonant_transfer_times(
    const SystemParams& p, int n_max, double tolerance = 1e-3);

/// Times (n + 1/2) pi / (2 |G A|) at which an excitation initially in
/// atom 1 is shared equally between the atoms under dispersive dynamics.
std::vector<double> entanglement_times(const SystemParams& p, int n_max);

enum class RegimeLabel {
    LargeHopping,
    LargeDetuning,
    NearResonance,
    Intermediate,
    Decoupled,
};

std::string to_string(RegimeLabel label);

struct RegimeClassification {
    RegimeLabel label = RegimeLabel::Intermediate;
    // Diagnostic ratios the decision was based on.
    double hopping_ratio = 0.0;    // |A| / max(|detuning|, g)
    double detuning_ratio = 0.0;   // |detuning| / max(|A|, g)
    double resonance_ratio = 0.0;  // (|detuning| + |A|) / max(min |delta_j|, g)
};

/// Deterministic regime label; threshold quantifies "much greater than"
/// and must exceed 1.
RegimeClassification classify_regime(const SystemParams& p, double threshold = 10.0);

}  // namespace ccdyn
