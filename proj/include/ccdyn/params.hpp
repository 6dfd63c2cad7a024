#pragma once

#include <utility>

#include "ccdyn/errors.hpp"

namespace ccdyn {

/// Physical parameters of the two-cavity system. All frequencies are
/// angular frequencies in units of the coupling g (so g itself is
/// normally 1) and times are in units of 1/g.
///
/// The atomic transition frequency is never stored: it is always
/// omega_f + detuning.
struct SystemParams {
    double g = 1.0;         // atom-cavity coupling
    double hopping = 0.0;   // intercavity photon hopping A
    double detuning = 0.0;  // atom-field detuning (omega_a - omega_f)
    double omega_f = 1000.0;  // bare cavity frequency

    double omega_a() const { return omega_f + detuning; }

    // Detunings from the delocalized field modes m1 (omega_f - A) and
    // m2 (omega_f + A).
    double delta1() const { return detuning + hopping; }
    double delta2() const { return detuning - hopping; }
};

/// (delta1, delta2); either may be zero or negative.
std::pair<double, double> detunings(const SystemParams& p);

/// Generalized Rabi frequency sqrt((delta_j/2)^2 + g^2) of delocalized
/// sector j in {1, 2}. Always >= g.
double rabi_frequency(const SystemParams& p, int mode);

/// Dimensionless dispersive coupling G = g^2 / (delta1 * delta2).
/// Signed: negative when |detuning| < |hopping|.
/// Throws SingularityError when either delta_j vanishes.
double dispersive_coupling(const SystemParams& p);

/// Beat frequency delta = delta2/2 + g^2/delta1 between the phase
/// rotation rates of the two delocalized atomic modes.
/// Throws SingularityError when delta1 vanishes.
double beat_frequency(const SystemParams& p);

}  // namespace ccdyn
