#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccdyn/config.hpp"
#include "ccdyn/scan.hpp"
#include "ccdyn/series.hpp"
#include "ccdyn/transfer.hpp"

namespace ccdyn {

inline constexpr const char* kTimeSeriesHeader =
    "t,p_atom1,p_atom2,p_cav1,p_cav2,p_field_total,p_mode_m1,p_mode_m2,norm";

/// Full-precision (17 significant digits) decimal rendering.
std::string format_double(double x);

void write_csv(std::ostream& os, const TimeSeries& series);
nlohmann::ordered_json time_series_json(const SimulationConfig& config,
                                        const TimeSeries& series);

struct CompareReport {
    SimulationConfig config;
    BackendKind model_b;
    double max_dev = 0.0;
    double rms_dev = 0.0;
    // t_max * g^2 / delta1, meaningful for the near-resonant family.
    std::optional<double> validity_indicator;
};

/// Per-amplitude magnitude deviation between two backends on the grid.
CompareReport compare_backends(const SimulationConfig& config, BackendKind model_b,
                               Execution exec = Execution::Parallel);
nlohmann::ordered_json compare_report_json(const CompareReport& report);

void write_scan_csv(std::ostream& os, const ScanRequest& req,
                    const std::vector<ScanRow>& rows);
nlohmann::ordered_json scan_json(const ScanRequest& req,
                                 const std::vector<ScanRow>& rows);

std::string scan_parameter_name(ScanParameter p);
std::string scan_observable_name(ScanObservable o);

void write_dispersive_times_csv(std::ostream& os,
                                const std::vector<DispersiveTransferTime>& rows);
void write_resonant_times_csv(std::ostream& os,
                              const std::vector<ResonantTransferTime>& rows);
nlohmann::ordered_json dispersive_times_json(
    const SystemParams& p, const std::vector<DispersiveTransferTime>& rows);
nlohmann::ordered_json resonant_times_json(
    const SystemParams& p, const std::vector<ResonantTransferTime>& rows);

}  // namespace ccdyn
