#include "ccdyn/series.hpp"

#include <stdexcept>

namespace ccdyn {

std::vector<double> TimeGrid::times() const {
    std::vector<double> out(samples);
    for (int k = 0; k < samples; ++k) out[k] = at(k);
    return out;
}

std::vector<double> TimeSeries::times() const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.t);
    return out;
}

std::vector<double> TimeSeries::column_p_atom2() const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.p_atom2);
    return out;
}

TimeSeriesRow observe(double t, const LocalAmplitudes& s) {
    TimeSeriesRow row;
    row.t = t;
    row.p_atom1 = std::norm(s.c);
    row.p_atom2 = std::norm(s.d);
    row.p_cav1 = std::norm(s.a);
    row.p_cav2 = std::norm(s.b);
    row.p_field_total = row.p_cav1 + row.p_cav2;
    const DelocalizedAmplitudes deloc = to_delocalized(s);
    row.p_mode_m1 = 0.5 * std::norm(deloc.alpha1);
    row.p_mode_m2 = 0.5 * std::norm(deloc.alpha2);
    row.norm = row.p_cav1 + row.p_cav2 + row.p_atom1 + row.p_atom2;
    return row;
}

namespace {

void check_grid(const TimeGrid& grid) {
    if (grid.samples < 2) {
        throw std::invalid_argument("time grid needs at least 2 samples");
    }
    if (!(grid.t_max >= 0.0)) {
        throw std::invalid_argument("time grid needs t_max >= 0");
    }
}

}  // namespace

TimeSeries sample_series_serial(const AmplitudeFn& fn, const TimeGrid& grid) {
    check_grid(grid);
    TimeSeries series;
    series.rows.resize(grid.samples);
    for (int k = 0; k < grid.samples; ++k) {
        const double t = grid.at(k);
        series.rows[k] = observe(t, fn(t));
    }
    return series;
}

TimeSeries sample_series_parallel(const AmplitudeFn& fn, const TimeGrid& grid) {
    check_grid(grid);
    TimeSeries series;
    series.rows.resize(grid.samples);
#pragma omp parallel for schedule(static)
    for (int k = 0; k < grid.samples; ++k) {
        const double t = grid.at(k);
        series.rows[k] = observe(t, fn(t));
    }
    return series;
}

TimeSeries sample_series(const AmplitudeFn& fn, const TimeGrid& grid,
                         Execution exec) {
    return exec == Execution::Serial ? sample_series_serial(fn, grid)
                                     : sample_series_parallel(fn, grid);
}

}  // namespace ccdyn
