#pragma once

#include <cmath>
#include <random>

#include "ccdyn/amplitudes.hpp"
#include "ccdyn/params.hpp"

namespace test_util {

inline ccdyn::SystemParams random_params(std::mt19937& rng) {
    std::uniform_real_distribution<double> hop(0.0, 200.0);
    std::uniform_real_distribution<double> det(-200.0, 200.0);
    std::uniform_real_distribution<double> freq(500.0, 2000.0);
    return {1.0, hop(rng), det(rng), freq(rng)};
}

inline ccdyn::LocalAmplitudes random_state(std::mt19937& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    ccdyn::LocalAmplitudes s{{n(rng), n(rng)}, {n(rng), n(rng)},
                             {n(rng), n(rng)}, {n(rng), n(rng)}};
    const double norm = std::sqrt(s.norm_sq());
    s.a /= norm;
    s.b /= norm;
    s.c /= norm;
    s.d /= norm;
    return s;
}

inline double max_amp_dev(const ccdyn::LocalAmplitudes& x,
                          const ccdyn::LocalAmplitudes& y) {
    return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b),
                     std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

}  // namespace test_util
