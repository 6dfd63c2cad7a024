#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ccdyn {

struct Peak {
    double t = 0.0;
    double value = 0.0;
    double prominence = 0.0;
};

/// Strict local maxima of a sampled trajectory with their prominences
/// (height above the higher of the two bounding valleys).
std::vector<Peak> local_maxima(std::span<const double> ts, std::span<const double> vs);

/// Interior local minima (t, value); prominence field unused.
std::vector<Peak> local_minima(std::span<const double> ts, std::span<const double> vs);

/// Golden-section maximization of f on [lo, hi] to the given relative
/// time tolerance; returns the refined abscissa.
double refine_peak(const std::function<double(double)>& f, double lo, double hi,
                   double rel_tol = 1e-6);

/// First peak whose prominence reaches prominence_frac times the global
/// maximum: small ripples superposed on a slow transfer oscillation are
/// skipped. Empty when no such peak exists in the window.
std::optional<Peak> first_transfer_peak(std::span<const double> ts,
                                        std::span<const double> vs,
                                        double prominence_frac = 0.25);

/// Peaks lying near odd multiples of the fast oscillation half-period,
/// i.e. the transfer maxima of a beating trajectory (as opposed to the
/// small secondary bumps near even multiples).
std::vector<Peak> principal_maxima(std::span<const double> ts,
                                   std::span<const double> vs, double fast_rate);

/// Least-squares fit of peak values to the envelope cos^2(delta t / 2);
/// scans delta over [delta_min, delta_max] and refines by ternary search.
double fit_beat_envelope(std::span<const Peak> peaks, double delta_min = 1e-4,
                         double delta_max = 0.5);

}  // namespace ccdyn
