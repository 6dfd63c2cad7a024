#include "ccdyn/amplitudes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ccdyn {

QubitState::QubitState(double theta_, double phi_) : theta(theta_), phi(phi_) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
        throw std::invalid_argument("QubitState: theta must be in [0, pi/2]");
    }
    if (!(phi >= 0.0 && phi < 2 * std::numbers::pi)) {
        throw std::invalid_argument("QubitState: phi must be in [0, 2 pi)");
    }
}

LocalAmplitudes QubitState::initial_amplitudes() const {
    return {0.0, 0.0, std::polar(std::sin(theta), phi), 0.0};
}

double QubitState::ground_weight() const { return std::cos(theta); }

}  // namespace ccdyn
