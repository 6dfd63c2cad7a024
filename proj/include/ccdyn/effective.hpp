#pragma once

#include <optional>
#include <span>

#include "ccdyn/amplitudes.hpp"
#include "ccdyn/params.hpp"

namespace ccdyn {

enum class Regime { Dispersive, Resonant, NearResonant };

/// A closed-form limiting model of the dynamics, valid in one of three
/// parameter regimes:
///  - Dispersive: atoms far detuned from both delocalized field modes
///    (covers both large hopping and large detuning); excitation hops
///    between the atoms at rate G*A without populating the field.
///  - Resonant: atoms exactly resonant with one delocalized mode and
///    all dispersive phase shifts dropped; Rabi transfer at rate g.
///  - NearResonant: small residual detuning delta2; transfer maxima
///    beat at the rate delta = delta2/2 + g^2/delta1.
class RegimeModel {
public:
    static RegimeModel dispersive(const SystemParams& p);
    static RegimeModel resonant(const SystemParams& p);
    /// Atoms near the symmetric mode m2 (small delta2), the standard case.
    static RegimeModel near_resonant(const SystemParams& p);
    /// Relabeled variant for negative detuning: atoms near m1 (small
    /// delta1), obtained by swapping the sector roles.
    static RegimeModel near_resonant_swapped(const SystemParams& p);

    Regime kind() const { return kind_; }
    const SystemParams& params() const { return params_; }
    bool swapped() const { return swapped_; }

    /// G (Dispersive models only).
    double dispersive_coupling() const { return coupling_; }
    /// Beat rate delta; zero by construction for Resonant models.
    double beat() const { return beat_; }
    /// Fast oscillation rate g + delta_off^2/(8g) of the near-resonant
    /// sector (equals g for Resonant models).
    double corrected_rabi() const { return corrected_rabi_; }

    /// Time beyond which the neglected dispersive terms become
    /// significant (0.1 |delta_far| / g^2); empty when not applicable.
    std::optional<double> validity_warning_time() const;

private:
    RegimeModel(Regime kind, const SystemParams& p, bool swapped);

    Regime kind_;
    SystemParams params_;
    bool swapped_ = false;
    double coupling_ = 0.0;
    double beat_ = 0.0;
    double corrected_rabi_ = 0.0;
};

/// Dispersive evolution: field pair rotates at rate A, atomic pair at
/// rate G*A, no field<->atom mixing. Requires a Dispersive model.
LocalAmplitudes evolve_dispersive(const RegimeModel& m, const LocalAmplitudes& init,
                                  double t);

/// Resonant evolution from c(0) = init_c (all other amplitudes zero).
LocalAmplitudes evolve_resonant(const RegimeModel& m, Complex init_c, double t);

/// Near-resonant evolution from c(0) = init_c, with beating between the
/// fast Rabi oscillation and the slow phase mismatch delta.
LocalAmplitudes evolve_near_resonant(const RegimeModel& m, Complex init_c, double t);

/// Evolve init with the model indicated by m.kind().
LocalAmplitudes evolve_model(const RegimeModel& m, const LocalAmplitudes& init,
                             double t);

/// Max over the grid of the per-amplitude magnitude deviation between
/// the model and the full-Hamiltonian evolution of the same state.
double model_error(const RegimeModel& m, const LocalAmplitudes& init,
                   std::span<const double> t_grid);

}  // namespace ccdyn
