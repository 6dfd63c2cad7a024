#pragma once

#include <complex>

namespace ccdyn {

using Complex = std::complex<double>;

/// Coefficients of a single-excitation state in the local basis
/// [photon in cavity 1, photon in cavity 2, atom 1 excited, atom 2 excited].
struct LocalAmplitudes {
    Complex a{};  // |g>1 |g>2 |10>
    Complex b{};  // |g>1 |g>2 |01>
    Complex c{};  // |e>1 |g>2 |00>
    Complex d{};  // |g>1 |e>2 |00>

    double norm_sq() const {
        return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    }
};

/// Coefficients in the delocalized basis, alpha_j = a + (-1)^j b and
/// beta_j = c + (-1)^j d. The transform is intentionally unnormalized,
/// so |alpha1|^2 + |alpha2|^2 = 2(|a|^2 + |b|^2) and likewise for beta.
struct DelocalizedAmplitudes {
    Complex alpha1{};  // field mode m1 (antisymmetric, frequency omega_f - A)
    Complex alpha2{};  // field mode m2 (symmetric, frequency omega_f + A)
    Complex beta1{};   // atomic mode s1
    Complex beta2{};   // atomic mode s2

    double norm_sq() const {
        return 0.5 * (std::norm(alpha1) + std::norm(alpha2) +
                      std::norm(beta1) + std::norm(beta2));
    }
};

inline DelocalizedAmplitudes to_delocalized(const LocalAmplitudes& s) {
    return {s.a - s.b, s.a + s.b, s.c - s.d, s.c + s.d};
}

inline LocalAmplitudes to_local(const DelocalizedAmplitudes& s) {
    return {0.5 * (s.alpha2 + s.alpha1), 0.5 * (s.alpha2 - s.alpha1),
            0.5 * (s.beta2 + s.beta1), 0.5 * (s.beta2 - s.beta1)};
}

/// Qubit superposition cos(theta)|g> + e^{i phi} sin(theta)|e> carried by
/// atom 1 at t = 0. theta in [0, pi/2], phi in [0, 2 pi).
struct QubitState {
    double theta = 0.0;
    double phi = 0.0;

    QubitState() = default;
    QubitState(double theta_, double phi_);

    /// Single-excitation component: c(0) = e^{i phi} sin(theta), rest zero.
    LocalAmplitudes initial_amplitudes() const;

    /// Amplitude of the inert zero-excitation component.
    double ground_weight() const;
};

}  // namespace ccdyn
