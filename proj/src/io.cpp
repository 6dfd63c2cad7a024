#include "ccdyn/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace ccdyn {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, const TimeSeries& series) {
    os << kTimeSeriesHeader << '\n';
    for (const TimeSeriesRow& r : series.rows) {
        os << format_double(r.t) << ',' << format_double(r.p_atom1) << ','
           << format_double(r.p_atom2) << ',' << format_double(r.p_cav1) << ','
           << format_double(r.p_cav2) << ',' << format_double(r.p_field_total)
           << ',' << format_double(r.p_mode_m1) << ','
           << format_double(r.p_mode_m2) << ',' << format_double(r.norm) << '\n';
    }
}

namespace {

nlohmann::ordered_json row_array(const TimeSeriesRow& r) {
    return {r.t,      r.p_atom1,       r.p_atom2,   r.p_cav1,    r.p_cav2,
            r.p_field_total, r.p_mode_m1, r.p_mode_m2, r.norm};
}

}  // namespace

nlohmann::ordered_json time_series_json(const SimulationConfig& config,
                                        const TimeSeries& series) {
    nlohmann::ordered_json j;
    j["config"] = config.to_json();
    j["columns"] = {"t",       "p_atom1",       "p_atom2",   "p_cav1",
                    "p_cav2",  "p_field_total", "p_mode_m1", "p_mode_m2",
                    "norm"};
    auto rows = nlohmann::ordered_json::array();
    for (const TimeSeriesRow& r : series.rows) rows.push_back(row_array(r));
    j["rows"] = std::move(rows);
    return j;
}

CompareReport compare_backends(const SimulationConfig& config, BackendKind model_b,
                               Execution exec) {
    config.validate();
    const LocalAmplitudes init = config.init.amplitudes();
    const AmplitudeFn fa = make_backend(config.model, config.params, init);
    const AmplitudeFn fb = make_backend(model_b, config.params, init);

    const TimeGrid grid{config.t_max, config.samples};

    auto point_dev = [&](int k, double& worst, double& sum_sq) {
        const double t = grid.at(k);
        const LocalAmplitudes xa = fa(t);
        const LocalAmplitudes xb = fb(t);
        const Complex pa[4] = {xa.a, xa.b, xa.c, xa.d};
        const Complex pb[4] = {xb.a, xb.b, xb.c, xb.d};
        for (int q = 0; q < 4; ++q) {
            const double dev = std::abs(std::abs(pa[q]) - std::abs(pb[q]));
            worst = std::max(worst, dev);
            sum_sq += dev * dev;
        }
    };

    double worst = 0.0;
    double sum_sq = 0.0;
    if (exec == Execution::Serial) {
        for (int k = 0; k < grid.samples; ++k) point_dev(k, worst, sum_sq);
    } else {
#pragma omp parallel for schedule(static) reduction(max : worst) \
    reduction(+ : sum_sq)
        for (int k = 0; k < grid.samples; ++k) point_dev(k, worst, sum_sq);
    }

    CompareReport report;
    report.config = config;
    report.model_b = model_b;
    report.max_dev = worst;
    report.rms_dev = std::sqrt(sum_sq / double(4 * grid.samples));
    const bool near_family = config.model == BackendKind::Resonant ||
                             config.model == BackendKind::NearResonant ||
                             model_b == BackendKind::Resonant ||
                             model_b == BackendKind::NearResonant;
    if (near_family && config.params.delta1() != 0.0) {
        report.validity_indicator = config.t_max * config.params.g *
                                    config.params.g / config.params.delta1();
    }
    return report;
}

nlohmann::ordered_json compare_report_json(const CompareReport& report) {
    nlohmann::ordered_json j;
    j["config"] = report.config.to_json();
    j["models"] = {to_string(report.config.model), to_string(report.model_b)};
    j["max_dev"] = report.max_dev;
    j["rms_dev"] = report.rms_dev;
    j["grid"] = {{"t_max", report.config.t_max},
                 {"samples", report.config.samples}};
    if (report.validity_indicator) {
        j["validity_t_g2_over_delta1"] = *report.validity_indicator;
    }
    return j;
}

std::string scan_parameter_name(ScanParameter p) {
    switch (p) {
        case ScanParameter::Hopping: return "hopping";
        case ScanParameter::Detuning: return "detuning";
        case ScanParameter::Coupling: return "g";
    }
    return "unknown";
}

std::string scan_observable_name(ScanObservable o) {
    switch (o) {
        case ScanObservable::MaxTransferProb: return "max-transfer-prob";
        case ScanObservable::FirstTransferTime: return "first-transfer-time";
        case ScanObservable::BeatFrequency: return "beat-frequency";
    }
    return "unknown";
}

void write_scan_csv(std::ostream& os, const ScanRequest& req,
                    const std::vector<ScanRow>& rows) {
    os << scan_parameter_name(req.parameter) << ','
       << scan_observable_name(req.observable) << '\n';
    for (const ScanRow& r : rows) {
        os << format_double(r.parameter) << ',' << format_double(r.value) << '\n';
    }
}

nlohmann::ordered_json scan_json(const ScanRequest& req,
                                 const std::vector<ScanRow>& rows) {
    nlohmann::ordered_json j;
    j["config"] = {{"parameter", scan_parameter_name(req.parameter)},
                   {"from", req.from},
                   {"to", req.to},
                   {"points", req.points},
                   {"observable", scan_observable_name(req.observable)},
                   {"horizon", req.horizon},
                   {"samples", req.samples},
                   {"g", req.base.g},
                   {"hopping", req.base.hopping},
                   {"detuning", req.base.detuning},
                   {"omega_f", req.base.omega_f}};
    j["columns"] = {scan_parameter_name(req.parameter),
                    scan_observable_name(req.observable)};
    auto arr = nlohmann::ordered_json::array();
    for (const ScanRow& r : rows) {
        if (std::isnan(r.value)) {
            arr.push_back({r.parameter, nullptr});
        } else {
            arr.push_back({r.parameter, r.value});
        }
    }
    j["rows"] = std::move(arr);
    return j;
}

void write_dispersive_times_csv(std::ostream& os,
                                const std::vector<DispersiveTransferTime>& rows) {
    os << "n,tau,phase_ok,m,residual\n";
    for (const auto& r : rows) {
        os << r.n << ',' << format_double(r.tau) << ',' << (r.phase_ok ? 1 : 0)
           << ',' << r.m << ',' << format_double(r.residual) << '\n';
    }
}

void write_resonant_times_csv(std::ostream& os,
                              const std::vector<ResonantTransferTime>& rows) {
    os << "n,tau,omega_ok,l,residual\n";
    for (const auto& r : rows) {
        os << r.n << ',' << format_double(r.tau) << ',' << (r.omega_ok ? 1 : 0)
           << ',' << r.l << ',' << format_double(r.residual) << '\n';
    }
}

namespace {

nlohmann::ordered_json params_json(const SystemParams& p) {
    return {{"g", p.g},
            {"hopping", p.hopping},
            {"detuning", p.detuning},
            {"omega_f", p.omega_f}};
}

}  // namespace

nlohmann::ordered_json dispersive_times_json(
    const SystemParams& p, const std::vector<DispersiveTransferTime>& rows) {
    nlohmann::ordered_json j;
    j["config"] = params_json(p);
    j["config"]["regime"] = "dispersive";
    j["columns"] = {"n", "tau", "phase_ok", "m", "residual"};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        arr.push_back({r.n, r.tau, r.phase_ok, r.m, r.residual});
    }
    j["rows"] = std::move(arr);
    return j;
}

nlohmann::ordered_json resonant_times_json(
    const SystemParams& p, const std::vector<ResonantTransferTime>& rows) {
    nlohmann::ordered_json j;
    j["config"] = params_json(p);
    j["config"]["regime"] = "resonant";
    j["columns"] = {"n", "tau", "omega_ok", "l", "residual"};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        arr.push_back({r.n, r.tau, r.omega_ok, r.l, r.residual});
    }
    j["rows"] = std::move(arr);
    return j;
}

}  // namespace ccdyn
