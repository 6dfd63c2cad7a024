#include "ccdyn/params.hpp"

#include <cmath>
#include <stdexcept>

namespace ccdyn {

std::pair<double, double> detunings(const SystemParams& p) {
    return {p.delta1(), p.delta2()};
}

double rabi_frequency(const SystemParams& p, int mode) {
    if (mode != 1 && mode != 2) {
        throw std::invalid_argument("rabi_frequency: mode index must be 1 or 2");
    }
    const double half = 0.5 * (mode == 1 ? p.delta1() : p.delta2());
    return std::hypot(half, p.g);
}

double dispersive_coupling(const SystemParams& p) {
    const auto [d1, d2] = detunings(p);
    if (d1 == 0.0 || d2 == 0.0) {
        throw SingularityError(
            "dispersive coupling undefined: atoms resonant with delocalized mode " +
            std::string(d1 == 0.0 ? "m1" : "m2"));
    }
    return p.g * p.g / (d1 * d2);
}

double beat_frequency(const SystemParams& p) {
    const double d1 = p.delta1();
    if (d1 == 0.0) {
        throw SingularityError("beat frequency undefined: delta1 = 0");
    }
    return 0.5 * p.delta2() + p.g * p.g / d1;
}

}  // namespace ccdyn
