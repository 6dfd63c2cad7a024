#pragma once

#include "ccdyn/amplitudes.hpp"
#include "ccdyn/params.hpp"

namespace ccdyn {

/// Closed-form single-excitation time evolution. The two delocalized
/// sectors (alpha_j, beta_j) evolve independently as detuned two-level
/// Rabi problems; phases are kept in the laboratory frame.
class ExactPropagator {
public:
    explicit ExactPropagator(const SystemParams& params);

    const SystemParams& params() const { return params_; }

    /// Evolve delocalized amplitudes from t = 0 to t.
    /// Throws std::invalid_argument on non-finite input.
    DelocalizedAmplitudes evolve(const DelocalizedAmplitudes& init, double t) const;

    /// Same evolution conjugated by the basis transform.
    LocalAmplitudes evolve_local(const LocalAmplitudes& init, double t) const;

private:
    SystemParams params_;
    double omega_a_;
    double half_delta_[2];  // delta_j / 2
    double nu_[2];          // sqrt((delta_j/2)^2 + g^2)
};

}  // namespace ccdyn
