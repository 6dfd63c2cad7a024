#pragma once

#include <functional>
#include <vector>

#include "ccdyn/amplitudes.hpp"

namespace ccdyn {

enum class Execution { Serial, Parallel };

/// Uniform grid of `samples` points covering [0, t_max].
struct TimeGrid {
    double t_max = 0.0;
    int samples = 2;

    double at(int k) const {
        return samples > 1 ? t_max * double(k) / double(samples - 1) : 0.0;
    }
    std::vector<double> times() const;
};

/// One sampled row of observables. p_field_total is by construction the
/// exact sum p_cav1 + p_cav2; the delocalized mode populations carry the
/// 1/2 of the unnormalized transform.
struct TimeSeriesRow {
    double t = 0.0;
    double p_atom1 = 0.0;       // |c|^2
    double p_atom2 = 0.0;       // |d|^2
    double p_cav1 = 0.0;        // |a|^2
    double p_cav2 = 0.0;        // |b|^2
    double p_field_total = 0.0; // |a|^2 + |b|^2
    double p_mode_m1 = 0.0;     // |alpha1|^2 / 2
    double p_mode_m2 = 0.0;     // |alpha2|^2 / 2
    double norm = 0.0;          // single-excitation weight
};

struct TimeSeries {
    std::vector<TimeSeriesRow> rows;

    std::vector<double> times() const;
    std::vector<double> column_p_atom2() const;
};

TimeSeriesRow observe(double t, const LocalAmplitudes& s);

/// An evolution backend bound to its initial state: t -> amplitudes.
using AmplitudeFn = std::function<LocalAmplitudes(double)>;

/// Serial reference implementation of grid sampling.
TimeSeries sample_series_serial(const AmplitudeFn& fn, const TimeGrid& grid);

/// OpenMP-parallel sampling. Rows are computed independently and stored
/// by index, so the result is bit-identical to the serial reference.
TimeSeries sample_series_parallel(const AmplitudeFn& fn, const TimeGrid& grid);

TimeSeries sample_series(const AmplitudeFn& fn, const TimeGrid& grid,
                         Execution exec = Execution::Parallel);

}  // namespace ccdyn
