#include "ccdyn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ccdyn {

std::vector<Peak> local_maxima(std::span<const double> ts,
                               std::span<const double> vs) {
    if (ts.size() != vs.size()) {
        throw std::invalid_argument("local_maxima: size mismatch");
    }
    std::vector<Peak> out;
    const std::ptrdiff_t n = std::ssize(vs);
    for (std::ptrdiff_t i = 1; i + 1 < n; ++i) {
        if (!(vs[i] > vs[i - 1] && vs[i] >= vs[i + 1])) continue;
        double left_base = vs[i];
        for (std::ptrdiff_t j = i - 1; j >= 0 && vs[j] <= vs[i]; --j) {
            left_base = std::min(left_base, vs[j]);
        }
        double right_base = vs[i];
        for (std::ptrdiff_t j = i + 1; j < n && vs[j] <= vs[i]; ++j) {
            right_base = std::min(right_base, vs[j]);
        }
        out.push_back({ts[i], vs[i], vs[i] - std::max(left_base, right_base)});
    }
    return out;
}

std::vector<Peak> local_minima(std::span<const double> ts,
                               std::span<const double> vs) {
    if (ts.size() != vs.size()) {
        throw std::invalid_argument("local_minima: size mismatch");
    }
    std::vector<Peak> out;
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
        if (vs[i] < vs[i - 1] && vs[i] <= vs[i + 1]) {
            out.push_back({ts[i], vs[i], 0.0});
        }
    }
    return out;
}

double refine_peak(const std::function<double(double)>& f, double lo, double hi,
                   double rel_tol) {
    constexpr double inv_golden = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_golden * (b - a);
    double d = a + inv_golden * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > rel_tol * std::max(1.0, std::abs(b))) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_golden * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_golden * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

std::optional<Peak> first_transfer_peak(std::span<const double> ts,
                                        std::span<const double> vs,
                                        double prominence_frac) {
    const double global_max = *std::max_element(vs.begin(), vs.end());
    for (const Peak& p : local_maxima(ts, vs)) {
        if (p.prominence >= prominence_frac * global_max) return p;
    }
    return std::nullopt;
}

std::vector<Peak> principal_maxima(std::span<const double> ts,
                                   std::span<const double> vs, double fast_rate) {
    if (!(fast_rate > 0.0)) {
        throw std::invalid_argument("principal_maxima: fast_rate must be positive");
    }
    std::vector<Peak> out;
    for (const Peak& p : local_maxima(ts, vs)) {
        const long k = std::lround(fast_rate * p.t / std::numbers::pi);
        if (k % 2 != 0) out.push_back(p);
    }
    return out;
}

double fit_beat_envelope(std::span<const Peak> peaks, double delta_min,
                         double delta_max) {
    if (peaks.empty()) {
        throw std::invalid_argument("fit_beat_envelope: no peaks");
    }
    auto sse = [&](double delta) {
        double s = 0.0;
        for (const Peak& p : peaks) {
            const double env = std::cos(0.5 * delta * p.t);
            const double r = p.value - env * env;
            s += r * r;
        }
        return s;
    };
    // Coarse scan, then ternary refinement around the best cell.
    const int cells = 4000;
    double best = delta_min, best_sse = sse(delta_min);
    for (int k = 1; k <= cells; ++k) {
        const double x = delta_min + (delta_max - delta_min) * double(k) / cells;
        const double v = sse(x);
        if (v < best_sse) {
            best_sse = v;
            best = x;
        }
    }
    const double step = (delta_max - delta_min) / cells;
    double lo = std::max(delta_min, best - step);
    double hi = std::min(delta_max, best + step);
    for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (sse(m1) < sse(m2)) hi = m2;
        else lo = m1;
    }
    return 0.5 * (lo + hi);
}

}  // namespace ccdyn
