// Command-line front end: simulations, backend comparisons, parameter
// scans, and transfer-time condition tables, emitting CSV or JSON.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ccdyn/config.hpp"
#include "ccdyn/effective.hpp"
#include "ccdyn/io.hpp"
#include "ccdyn/scan.hpp"
#include "ccdyn/series.hpp"
#include "ccdyn/transfer.hpp"

namespace {

using namespace ccdyn;

// Raw flag values, interpreted in units of g (times in 1/g).
struct CommonFlags {
    double g = 1.0;
    double hopping = 0.0;
    double detuning = 0.0;
    double omega_f = 1000.0;
    double t_max = 0.0;
    int samples = 1000;
    std::string init = "atom1";
    std::string format = "csv";
    std::string output;
    double threshold = 10.0;
    double tolerance = 1e-3;
    int n_max = 2;
};

void add_param_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--g", f.g, "Coupling strength; rescales all other inputs");
    cmd->add_option("--hopping", f.hopping, "Intercavity hopping A (units of g)");
    cmd->add_option("--detuning", f.detuning, "Atom-field detuning (units of g)");
    cmd->add_option("--omega-f", f.omega_f, "Bare cavity frequency (units of g)");
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", f.output, "Write to file instead of stdout");
}

SystemParams scaled_params(const CommonFlags& f) {
    if (!(f.g > 0.0)) {
        throw std::invalid_argument("--g must be positive");
    }
    return {f.g, f.hopping * f.g, f.detuning * f.g, f.omega_f * f.g};
}

SimulationConfig build_config(const CommonFlags& f, const std::string& model) {
    SimulationConfig cfg;
    cfg.params = scaled_params(f);
    cfg.model = backend_from_string(model);
    cfg.init = InitState::parse(f.init);
    cfg.t_max = f.t_max / f.g;
    cfg.samples = f.samples;
    cfg.format = f.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    cfg.validate();
    return cfg;
}

void warn_on_regime(const SimulationConfig& cfg, double threshold) {
    const RegimeClassification cls = classify_regime(cfg.params, threshold);
    auto warn_mismatch = [&](const char* family) {
        std::cerr << "warning: parameters classify as " << to_string(cls.label)
                  << ", not " << family << "; model accuracy is not guaranteed\n";
    };
    switch (cfg.model) {
        case BackendKind::Dispersive:
            if (cls.label != RegimeLabel::LargeHopping &&
                cls.label != RegimeLabel::LargeDetuning) {
                warn_mismatch("a dispersive regime");
            }
            break;
        case BackendKind::Resonant:
        case BackendKind::NearResonant: {
            if (cls.label != RegimeLabel::NearResonance) {
                warn_mismatch("near-resonance");
            }
            const RegimeModel model = cfg.model == BackendKind::Resonant
                                          ? RegimeModel::resonant(cfg.params)
                                          : RegimeModel::near_resonant(cfg.params);
            if (auto limit = model.validity_warning_time();
                limit && cfg.t_max > *limit) {
                std::cerr << "warning: t-max " << cfg.t_max
                          << " exceeds the model validity window (~" << *limit
                          << "); neglected dispersive terms become significant\n";
            }
            break;
        }
        default: break;
    }
}

// Stream sink: file when --output given, stdout otherwise.
int with_sink(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << '\n';
        return 2;
    }
    fn(out);
    return 0;
}

int run_simulate(const CommonFlags& f, const std::string& model) {
    const SimulationConfig cfg = build_config(f, model);
    warn_on_regime(cfg, f.threshold);
    const TimeSeries series =
        sample_series(make_backend(cfg), TimeGrid{cfg.t_max, cfg.samples});
    return with_sink(f.output, [&](std::ostream& os) {
        if (cfg.format == OutputFormat::Json) {
            os << time_series_json(cfg, series).dump(2) << '\n';
        } else {
            write_csv(os, series);
        }
    });
}

int run_compare(const CommonFlags& f, const std::string& model_a,
                const std::string& model_b) {
    const SimulationConfig cfg = build_config(f, model_a);
    const CompareReport report =
        compare_backends(cfg, backend_from_string(model_b));
    return with_sink(f.output, [&](std::ostream& os) {
        os << compare_report_json(report).dump(2) << '\n';
    });
}

int run_scan(const CommonFlags& f, const std::string& param,
             const std::string& observable, double from, double to, int points) {
    ScanRequest req;
    req.base = scaled_params(f);
    if (param == "hopping") {
        req.parameter = ScanParameter::Hopping;
    } else if (param == "detuning") {
        req.parameter = ScanParameter::Detuning;
    } else if (param == "g") {
        req.parameter = ScanParameter::Coupling;
    } else {
        throw std::invalid_argument("unknown scan parameter: " + param);
    }
    if (observable == "max-transfer-prob") {
        req.observable = ScanObservable::MaxTransferProb;
    } else if (observable == "first-transfer-time") {
        req.observable = ScanObservable::FirstTransferTime;
    } else if (observable == "beat-frequency") {
        req.observable = ScanObservable::BeatFrequency;
    } else {
        throw std::invalid_argument("unknown observable: " + observable);
    }
    const double scale = req.parameter == ScanParameter::Coupling ? 1.0 : f.g;
    req.from = from * scale;
    req.to = to * scale;
    req.points = points;
    req.horizon = (f.t_max > 0.0 ? f.t_max : 40.0) / f.g;
    req.samples = f.samples > 2 ? f.samples : 4001;

    const auto rows = ccdyn::run_scan(req);
    return with_sink(f.output, [&](std::ostream& os) {
        if (f.format == "json") {
            os << scan_json(req, rows).dump(2) << '\n';
        } else {
            write_scan_csv(os, req, rows);
        }
    });
}

int run_transfer_times(const CommonFlags& f, const std::string& regime) {
    const SystemParams params = scaled_params(f);
    if (regime == "dispersive") {
        const auto rows = dispersive_transfer_times(params, f.n_max, f.tolerance);
        return with_sink(f.output, [&](std::ostream& os) {
            if (f.format == "json") {
                os << dispersive_times_json(params, rows).dump(2) << '\n';
            } else {
                write_dispersive_times_csv(os, rows);
            }
        });
    }
    if (regime == "resonant") {
        if (std::abs(params.delta2()) >= params.g && params.g > 0.0) {
            std::cerr << "warning: |delta2| = " << std::abs(params.delta2())
                      << " is not small against g; resonant transfer times are "
                         "unreliable here\n";
        }
        const auto rows = resonant_transfer_times(params, f.n_max, f.tolerance);
        return with_sink(f.output, [&](std::ostream& os) {
            if (f.format == "json") {
                os << resonant_times_json(params, rows).dump(2) << '\n';
            } else {
                write_resonant_times_csv(os, rows);
            }
        });
    }
    throw std::invalid_argument("unknown regime: " + regime);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupled-cavity dynamics simulator"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string model, model_b, scan_param = "hopping",
                observable = "max-transfer-prob", regime = "dispersive";
    double scan_from = 0.0, scan_to = 0.0;
    int scan_points = 2;

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Sample observable trajectories on a uniform time grid");
    simulate->add_option("--model", model, "Evolution backend")
        ->required()
        ->check(CLI::IsMember(
            {"exact", "oracle", "dispersive", "resonant", "near-resonant"}));
    add_param_flags(simulate, flags);
    simulate->add_option("--t-max", flags.t_max, "End of the time grid (1/g)")
        ->required();
    simulate->add_option("--samples", flags.samples, "Grid points");
    simulate->add_option("--init", flags.init,
                         "Initial state: atom1|atom2|cavity1|cavity2 or theta,phi");
    simulate->add_option("--threshold", flags.threshold,
                         "Regime classification threshold");
    add_output_flags(simulate, flags);

    CLI::App* compare = app.add_subcommand(
        "compare", "Per-amplitude deviation between two backends");
    compare->add_option("--model", model, "First backend")->required();
    compare->add_option("--model-b", model_b, "Second backend")->required();
    add_param_flags(compare, flags);
    compare->add_option("--t-max", flags.t_max, "End of the time grid (1/g)")
        ->required();
    compare->add_option("--samples", flags.samples, "Grid points");
    compare->add_option("--init", flags.init, "Initial state");
    add_output_flags(compare, flags);

    CLI::App* scan = app.add_subcommand(
        "scan", "Sweep one parameter and evaluate a transfer observable");
    scan->add_option("--param", scan_param, "Swept parameter")
        ->check(CLI::IsMember({"hopping", "detuning", "g"}));
    scan->add_option("--from", scan_from, "Sweep start")->required();
    scan->add_option("--to", scan_to, "Sweep end")->required();
    scan->add_option("--points", scan_points, "Sweep points")->required();
    scan->add_option("--observable", observable, "Observable per point")
        ->check(CLI::IsMember(
            {"max-transfer-prob", "first-transfer-time", "beat-frequency"}));
    add_param_flags(scan, flags);
    scan->add_option("--t-max", flags.t_max, "Trajectory horizon (1/g)");
    scan->add_option("--samples", flags.samples, "Trajectory grid points");
    add_output_flags(scan, flags);

    CLI::App* times = app.add_subcommand(
        "transfer-times", "Candidate perfect-transfer times and phase conditions");
    times->add_option("--regime", regime, "Condition family")
        ->required()
        ->check(CLI::IsMember({"dispersive", "resonant"}));
    add_param_flags(times, flags);
    times->add_option("--n-max", flags.n_max, "Largest candidate index");
    times->add_option("--tolerance", flags.tolerance,
                      "Phase-condition residual tolerance");
    add_output_flags(times, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (simulate->parsed()) return run_simulate(flags, model);
        if (compare->parsed()) return run_compare(flags, model, model_b);
        if (scan->parsed()) {
            return run_scan(flags, scan_param, observable, scan_from, scan_to,
                            scan_points);
        }
        return run_transfer_times(flags, regime);
    } catch (const ccdyn::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
