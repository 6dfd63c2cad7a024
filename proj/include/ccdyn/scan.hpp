#pragma once

#include <vector>

#include "ccdyn/params.hpp"
#include "ccdyn/series.hpp"

namespace ccdyn {

enum class ScanParameter { Hopping, Detuning, Coupling };
enum class ScanObservable { MaxTransferProb, FirstTransferTime, BeatFrequency };

struct ScanRequest {
    SystemParams base;
    ScanParameter parameter = ScanParameter::Hopping;
    double from = 0.0;
    double to = 0.0;
    int points = 2;
    ScanObservable observable = ScanObservable::MaxTransferProb;
    double horizon = 40.0;  // time window for trajectory observables
    int samples = 4001;     // grid resolution within the horizon
};

struct ScanRow {
    double parameter = 0.0;
    double value = 0.0;  // NaN where the observable is undefined
};

SystemParams with_parameter(const SystemParams& base, ScanParameter which,
                            double value);

/// Evaluate the observable over a uniform sweep of the chosen parameter.
/// Trajectory observables run the full-Hamiltonian propagator from a
/// single excitation in atom 1; first-transfer-time locates the first
/// pronounced maximum of p_atom2 (prominence >= 25% of the global
/// maximum) and refines it to 1e-6 relative. Points are independent and
/// may be evaluated in parallel; output order follows the sweep.
std::vector<ScanRow> run_scan(const ScanRequest& req,
                              Execution exec = Execution::Parallel);

}  // namespace ccdyn
