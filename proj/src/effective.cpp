#include "ccdyn/effective.hpp"

#include <cmath>

#include "ccdyn/oracle.hpp"

namespace ccdyn {

RegimeModel::RegimeModel(Regime kind, const SystemParams& p, bool swapped)
    : kind_(kind), params_(p), swapped_(swapped) {
    switch (kind) {
        case Regime::Dispersive:
            coupling_ = ccdyn::dispersive_coupling(p);
            corrected_rabi_ = std::abs(coupling_) * std::abs(p.hopping);
            break;
        case Regime::Resonant:
            beat_ = 0.0;  // residual detuning and Stark shift both dropped
            corrected_rabi_ = p.g;
            break;
        case Regime::NearResonant: {
            // Standard orientation: atoms near m2, delta2 is the small
            // detuning and sector 1 contributes only its Stark shift.
            // Swapped orientation exchanges the two sector roles.
            const double near = swapped ? p.delta1() : p.delta2();
            const double far = swapped ? p.delta2() : p.delta1();
            if (far == 0.0) {
                throw SingularityError(
                    "near-resonant model undefined: far-detuned sector has zero "
                    "detuning");
            }
            beat_ = 0.5 * near + p.g * p.g / far;
            corrected_rabi_ = p.g + near * near / (8.0 * p.g);
            break;
        }
    }
}

RegimeModel RegimeModel::dispersive(const SystemParams& p) {
    return {Regime::Dispersive, p, false};
}

RegimeModel RegimeModel::resonant(const SystemParams& p) {
    return {Regime::Resonant, p, false};
}

RegimeModel RegimeModel::near_resonant(const SystemParams& p) {
    return {Regime::NearResonant, p, false};
}

RegimeModel RegimeModel::near_resonant_swapped(const SystemParams& p) {
    return {Regime::NearResonant, p, true};
}

std::optional<double> RegimeModel::validity_warning_time() const {
    if (kind_ == Regime::Dispersive || params_.g == 0.0) return std::nullopt;
    const double far = swapped_ ? params_.delta2() : params_.delta1();
    if (far == 0.0) return std::nullopt;
    return 0.1 * std::abs(far) / (params_.g * params_.g);
}

LocalAmplitudes evolve_dispersive(const RegimeModel& m, const LocalAmplitudes& init,
                                  double t) {
    if (m.kind() != Regime::Dispersive) {
        throw RegimeError("evolve_dispersive: model is not dispersive");
    }
    const SystemParams& p = m.params();
    const double G = m.dispersive_coupling();
    const double A = p.hopping;
    const Complex field_phase = std::polar(1.0, -(p.omega_f - G * p.detuning) * t);
    const Complex atom_phase = std::polar(1.0, -(p.omega_a() + G * p.detuning) * t);
    const Complex i(0.0, 1.0);

    const double ca = std::cos(A * t), sa = std::sin(A * t);
    const double cg = std::cos(G * A * t), sg = std::sin(G * A * t);
    return {
        field_phase * (init.a * ca - i * init.b * sa),
        field_phase * (-i * init.a * sa + init.b * ca),
        atom_phase * (init.c * cg - i * init.d * sg),
        atom_phase * (-i * init.c * sg + init.d * cg),
    };
}

LocalAmplitudes evolve_resonant(const RegimeModel& m, Complex init_c, double t) {
    if (m.kind() != Regime::Resonant) {
        throw RegimeError("evolve_resonant: model is not resonant");
    }
    const SystemParams& p = m.params();
    const Complex phase = std::polar(1.0, -p.omega_a() * t);
    const double half = 0.5 * p.g * t;
    const double s = std::sin(half), cc = std::cos(half);
    const Complex field = Complex(0.0, -0.5) * init_c * phase * std::sin(p.g * t);
    return {field, field, init_c * phase * cc * cc, init_c * phase * s * s};
}

LocalAmplitudes evolve_near_resonant(const RegimeModel& m, Complex init_c, double t) {
    if (m.kind() != Regime::NearResonant) {
        throw RegimeError("evolve_near_resonant: model is not near-resonant");
    }
    const SystemParams& p = m.params();
    const double nu = m.corrected_rabi();
    // Laboratory-frame prefactor of the near-resonant sector,
    // exp(-i (omega_a - delta_near/2) t); equivalently omega_f + delta_far/2.
    const double near = m.swapped() ? p.delta1() : p.delta2();
    const Complex phase = std::polar(1.0, -(p.omega_a() - 0.5 * near) * t);
    const Complex slow = std::polar(1.0, -m.beat() * t);
    const double fast = std::cos(nu * t);

    const Complex half_field =
        Complex(0.0, -0.5) * init_c * phase * std::sin(nu * t);
    const Complex sum = 0.5 * init_c * phase * (fast + slow);
    const Complex diff = 0.5 * init_c * phase * (fast - slow);
    if (!m.swapped()) {
        return {half_field, half_field, sum, diff};
    }
    // Atoms resonant with m1: the resonant field amplitude lives in
    // alpha1, so a and b acquire opposite signs, and the role of the
    // slowly rotating term in c, d is exchanged.
    return {half_field, -half_field, sum, -diff};
}

LocalAmplitudes evolve_model(const RegimeModel& m, const LocalAmplitudes& init,
                             double t) {
    if (m.kind() == Regime::Dispersive) return evolve_dispersive(m, init, t);
    if (init.a != Complex{} || init.b != Complex{} || init.d != Complex{}) {
        throw RegimeError(
            "resonant-family models require the initial excitation in atom 1");
    }
    return m.kind() == Regime::Resonant ? evolve_resonant(m, init.c, t)
                                        : evolve_near_resonant(m, init.c, t);
}

double model_error(const RegimeModel& m, const LocalAmplitudes& init,
                   std::span<const double> t_grid) {
    const EigenPropagator reference(single_excitation_hamiltonian(m.params()));
    const Eigen::Vector4cd init_vec = to_vector(init);

    double worst = 0.0;
    for (double t : t_grid) {
        const LocalAmplitudes model = evolve_model(m, init, t);
        const Eigen::Vector4cd ref = reference.evolve(init_vec, t);
        const Complex model_amps[4] = {model.a, model.b, model.c, model.d};
        for (int k = 0; k < 4; ++k) {
            worst = std::max(worst,
                             std::abs(std::abs(model_amps[k]) - std::abs(ref[k])));
        }
    }
    return worst;
}

}  // namespace ccdyn
