#include "ccdyn/transfer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ccdyn {

double transfer_fidelity(const QubitState& qubit, Complex transfer_amplitude) {
    if (std::abs(transfer_amplitude) > 1.0 + 1e-9) {
        throw std::invalid_argument("transfer_fidelity: |T| > 1");
    }
    const double s = std::sin(qubit.theta);
    const double c = std::cos(qubit.theta);
    return std::norm(c * c + s * s * transfer_amplitude);
}

TransferReport assess_transfer(const QubitState& qubit, Complex transfer_amplitude,
                               double time) {
    TransferReport r;
    r.time = time;
    r.transfer_probability = std::norm(transfer_amplitude);
    r.fidelity = transfer_fidelity(qubit, transfer_amplitude);
    r.phase_error = std::arg(transfer_amplitude);
    return r;
}

std::vector<DispersiveTransferTime> dispersive_transfer_times(const SystemParams& p,
                                                              int n_max,
                                                              double tolerance) {
    const double G = dispersive_coupling(p);
    const double rate = G * p.hopping;
    if (rate == 0.0) {
        throw RegimeError("dispersive transfer rate G*A is zero");
    }
    // d(tau)/c(0) = -i sin(G A tau) exp(-i (omega_a + G Delta) tau); at
    // tau_n the sine is sgn(G A), so the phase condition picks up the
    // sign of the transfer rate.
    const double sign = rate > 0.0 ? 1.0 : -1.0;
    const double phase_rate = p.omega_a() + G * p.detuning;

    std::vector<DispersiveTransferTime> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        DispersiveTransferTime row;
        row.n = n;
        row.tau = (2 * n + 0.5) * std::numbers::pi / std::abs(rate);
        const double x = phase_rate * row.tau / std::numbers::pi + 0.5 * sign;
        row.m = llround(0.5 * x);
        row.residual = x - 2.0 * double(row.m);
        row.phase_ok = std::abs(row.residual) <= tolerance;
        out.push_back(row);
    }
    return out;
}

std::vector<ResonantTransferTime> resonant_transfer_times(const SystemParams& p,
                                                          int n_max,
                                                          double tolerance) {
    if (p.g <= 0.0) {
        throw RegimeError("resonant transfer requires g > 0");
    }
    std::vector<ResonantTransferTime> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        ResonantTransferTime row;
        row.n = n;
        row.tau = (2 * n + 1) * std::numbers::pi / p.g;
        const double y = p.omega_a() / (2.0 * p.g);
        row.l = llround(y);
        row.residual = y - double(row.l);
        row.omega_ok = std::abs(row.residual) <= tolerance;
        out.push_back(row);
    }
    return out;
}

std::vector<double> entanglement_times(const SystemParams& p, int n_max) {
    const double rate = dispersive_coupling(p) * p.hopping;
    if (rate == 0.0) {
        throw RegimeError("dispersive transfer rate G*A is zero");
    }
    std::vector<double> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        out.push_back((n + 0.5) * std::numbers::pi / (2.0 * std::abs(rate)));
    }
    return out;
}

std::string to_string(RegimeLabel label) {
    switch (label) {
        case RegimeLabel::LargeHopping: return "large-hopping";
        case RegimeLabel::LargeDetuning: return "large-detuning";
        case RegimeLabel::NearResonance: return "near-resonance";
        case RegimeLabel::Intermediate: return "intermediate";
        case RegimeLabel::Decoupled: return "decoupled";
    }
    return "unknown";
}

RegimeClassification classify_regime(const SystemParams& p, double threshold) {
    if (!(threshold > 1.0)) {
        throw std::invalid_argument("classify_regime: threshold must exceed 1");
    }
    RegimeClassification r;
    const double g = std::abs(p.g);
    const double hop = std::abs(p.hopping);
    const double det = std::abs(p.detuning);
    const double min_d = std::min(std::abs(p.delta1()), std::abs(p.delta2()));

    r.hopping_ratio = hop / std::max(det, g);
    r.detuning_ratio = det / std::max(hop, g);
    r.resonance_ratio = (det + hop) / std::max(min_d, g);

    if (hop == 0.0 || g == 0.0) {
        r.label = RegimeLabel::Decoupled;
    } else if (min_d < g && r.resonance_ratio >= threshold) {
        r.label = RegimeLabel::NearResonance;
    } else if (r.hopping_ratio >= threshold) {
        r.label = RegimeLabel::LargeHopping;
    } else if (r.detuning_ratio >= threshold) {
        r.label = RegimeLabel::LargeDetuning;
    } else {
        r.label = RegimeLabel::Intermediate;
    }
    return r;
}

}  // namespace ccdyn
