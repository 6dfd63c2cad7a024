#include "ccdyn/scan.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ccdyn/analysis.hpp"
#include "ccdyn/oracle.hpp"

namespace ccdyn {

SystemParams with_parameter(const SystemParams& base, ScanParameter which,
                            double value) {
    SystemParams p = base;
    switch (which) {
        case ScanParameter::Hopping: p.hopping = value; break;
        case ScanParameter::Detuning: p.detuning = value; break;
        case ScanParameter::Coupling: p.g = value; break;
    }
    return p;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double evaluate_point(const ScanRequest& req, double value) {
    const SystemParams p = with_parameter(req.base, req.parameter, value);

    if (req.observable == ScanObservable::BeatFrequency) {
        // Formula observable; undefined at the delta1 = 0 pole.
        try {
            return beat_frequency(p);
        } catch (const SingularityError&) {
            return kNaN;
        }
    }

    const EigenPropagator prop(single_excitation_hamiltonian(p));
    const Eigen::Vector4cd init = to_vector({0.0, 0.0, 1.0, 0.0});
    std::vector<double> ts(req.samples), p2(req.samples);
    for (int k = 0; k < req.samples; ++k) {
        ts[k] = req.horizon * double(k) / double(req.samples - 1);
        p2[k] = std::norm(prop.evolve(init, ts[k])[3]);
    }

    if (req.observable == ScanObservable::MaxTransferProb) {
        return *std::max_element(p2.begin(), p2.end());
    }

    // FirstTransferTime: first pronounced grid peak, golden-refined.
    const auto peak = first_transfer_peak(ts, p2);
    if (!peak) return kNaN;
    auto idx = std::size_t(std::lround(peak->t / req.horizon * (req.samples - 1)));
    idx = std::clamp<std::size_t>(idx, 1, req.samples - 2);
    auto f = [&](double t) { return std::norm(prop.evolve(init, t)[3]); };
    return refine_peak(f, ts[idx - 1], ts[idx + 1]);
}

}  // namespace

std::vector<ScanRow> run_scan(const ScanRequest& req, Execution exec) {
    if (req.points < 1) {
        throw std::invalid_argument("run_scan: points must be >= 1");
    }
    if (req.samples < 2 || !(req.horizon > 0.0)) {
        throw std::invalid_argument("run_scan: invalid horizon/samples");
    }

    std::vector<ScanRow> rows(req.points);
    auto value_at = [&](int k) {
        if (req.points == 1) return req.from;
        return req.from + (req.to - req.from) * double(k) / double(req.points - 1);
    };

    if (exec == Execution::Serial) {
        for (int k = 0; k < req.points; ++k) {
            rows[k] = {value_at(k), evaluate_point(req, value_at(k))};
        }
    } else {
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < req.points; ++k) {
            rows[k] = {value_at(k), evaluate_point(req, value_at(k))};
        }
    }
    return rows;
}

}  // namespace ccdyn
