#include "ccdyn/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace ccdyn {

namespace {

bool finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

ExactPropagator::ExactPropagator(const SystemParams& params)
    : params_(params), omega_a_(params.omega_a()) {
    const auto [d1, d2] = detunings(params);
    half_delta_[0] = 0.5 * d1;
    half_delta_[1] = 0.5 * d2;
    nu_[0] = std::hypot(half_delta_[0], params.g);
    nu_[1] = std::hypot(half_delta_[1], params.g);
}

DelocalizedAmplitudes ExactPropagator::evolve(const DelocalizedAmplitudes& init,
                                              double t) const {
    if (!std::isfinite(t)) {
        throw std::invalid_argument("ExactPropagator: non-finite time");
    }
    if (!finite(init.alpha1) || !finite(init.alpha2) || !finite(init.beta1) ||
        !finite(init.beta2)) {
        throw std::invalid_argument("ExactPropagator: non-finite amplitudes");
    }

    const Complex in_alpha[2] = {init.alpha1, init.alpha2};
    const Complex in_beta[2] = {init.beta1, init.beta2};
    Complex out_alpha[2], out_beta[2];

    const double g = params_.g;
    for (int j = 0; j < 2; ++j) {
        const double nu = nu_[j];
        const double hd = half_delta_[j];
        const Complex phase = std::polar(1.0, -(omega_a_ - hd) * t);
        const double cs = std::cos(nu * t);
        // sin(nu t)/nu; the nu = 0 case (g = 0 and delta_j = 0) pairs with
        // vanishing coefficients, so the limit t is exact.
        const double sc = nu > 0.0 ? std::sin(nu * t) / nu : t;
        const Complex i_sc(0.0, sc);
        out_alpha[j] = phase * (in_alpha[j] * cs +
                                i_sc * (hd * in_alpha[j] - g * in_beta[j]));
        out_beta[j] = phase * (in_beta[j] * cs -
                               i_sc * (hd * in_beta[j] + g * in_alpha[j]));
    }
    return {out_alpha[0], out_alpha[1], out_beta[0], out_beta[1]};
}

LocalAmplitudes ExactPropagator::evolve_local(const LocalAmplitudes& init,
                                              double t) const {
    return to_local(evolve(to_delocalized(init), t));
}

}  // namespace ccdyn
