#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "ccdyn/analysis.hpp"
#include "ccdyn/config.hpp"
#include "ccdyn/io.hpp"
#include "ccdyn/scan.hpp"
#include "ccdyn/series.hpp"
#include "helpers.hpp"

using namespace ccdyn;
using Catch::Approx;

namespace {

SimulationConfig fig1_config(int samples) {
    SimulationConfig cfg;
    cfg.params = {1.0, 10.0, 0.1, 1000.0};
    cfg.model = BackendKind::Oracle;
    cfg.init = InitState::parse("atom1");
    cfg.t_max = 40.0;
    cfg.samples = samples;
    return cfg;
}

}  // namespace

TEST_CASE("parallel sampling is bit-identical to the serial reference") {
    const SimulationConfig cfg = fig1_config(2001);
    const AmplitudeFn fn = make_backend(cfg);
    const TimeGrid grid{cfg.t_max, cfg.samples};

    const TimeSeries serial = sample_series_serial(fn, grid);
    const TimeSeries parallel = sample_series_parallel(fn, grid);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        const auto& s = serial.rows[i];
        const auto& p = parallel.rows[i];
        REQUIRE(s.t == p.t);
        REQUIRE(s.p_atom1 == p.p_atom1);
        REQUIRE(s.p_atom2 == p.p_atom2);
        REQUIRE(s.p_cav1 == p.p_cav1);
        REQUIRE(s.p_cav2 == p.p_cav2);
        REQUIRE(s.p_field_total == p.p_field_total);
        REQUIRE(s.p_mode_m1 == p.p_mode_m1);
        REQUIRE(s.p_mode_m2 == p.p_mode_m2);
        REQUIRE(s.norm == p.norm);
    }
}

TEST_CASE("time series row invariants") {
    const SimulationConfig cfg = fig1_config(501);
    const TimeSeries series = sample_series(make_backend(cfg), {40.0, 501});
    for (const auto& r : series.rows) {
        REQUIRE(r.p_field_total == r.p_cav1 + r.p_cav2);
        REQUIRE(r.p_mode_m1 + r.p_mode_m2 ==
                Approx(r.p_field_total).margin(1e-12));
        REQUIRE(r.norm == Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("zero-length grid emits identical initial rows") {
    SimulationConfig cfg = fig1_config(2);
    cfg.model = BackendKind::Exact;
    cfg.t_max = 0.0;
    const TimeSeries series =
        sample_series(make_backend(cfg), {cfg.t_max, cfg.samples});
    REQUIRE(series.rows.size() == 2);
    REQUIRE(series.rows[0].t == series.rows[1].t);
    REQUIRE(series.rows[0].p_atom1 == 1.0);
    REQUIRE(series.rows[1].p_atom1 == 1.0);
    REQUIRE(series.rows[0].p_atom2 == series.rows[1].p_atom2);
}

TEST_CASE("csv output format") {
    TimeSeries series;
    series.rows.push_back(observe(0.1, {0.0, 0.0, 1.0, 0.0}));
    std::ostringstream os;
    write_csv(os, series);
    const std::string text = os.str();
    REQUIRE(text.starts_with(
        "t,p_atom1,p_atom2,p_cav1,p_cav2,p_field_total,p_mode_m1,p_mode_m2,norm\n"));
    REQUIRE(text.find("0.10000000000000001,") != std::string::npos);
    REQUIRE(text.back() == '\n');
    REQUIRE(format_double(1.0) == "1");
    REQUIRE(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("config JSON round-trip reproduces the run") {
    SimulationConfig cfg = fig1_config(101);
    cfg.init = InitState::parse("0.5,1.25");
    cfg.format = OutputFormat::Json;

    const auto echoed = SimulationConfig::from_json(cfg.to_json());
    const TimeSeries a =
        sample_series(make_backend(cfg), {cfg.t_max, cfg.samples});
    const TimeSeries b =
        sample_series(make_backend(echoed), {echoed.t_max, echoed.samples});
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        REQUIRE(a.rows[i].p_atom2 == b.rows[i].p_atom2);
        REQUIRE(a.rows[i].norm == b.rows[i].norm);
    }

    const auto j = time_series_json(cfg, a);
    REQUIRE(j.at("rows").size() == a.rows.size());
    REQUIRE(j.at("rows").at(0).size() == 9);
    REQUIRE(j.at("config").at("model") == "oracle");
}

TEST_CASE("config validation and init parsing") {
    SimulationConfig cfg = fig1_config(1);
    REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.samples = 100;
    cfg.t_max = -1.0;
    REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);

    REQUIRE(InitState::parse("atom2").amplitudes().d == Complex{1.0});
    REQUIRE(InitState::parse("cavity1").amplitudes().a == Complex{1.0});
    REQUIRE_THROWS_AS(InitState::parse("nonsense"), std::invalid_argument);
    REQUIRE_THROWS_AS(InitState::parse("0.5"), std::invalid_argument);
    REQUIRE_THROWS_AS(InitState::parse("9.0,0.0"), std::invalid_argument);

    // Resonant-family backends need the excitation in atom 1.
    SystemParams p{1.0, 100.0, 100.0, 1000.0};
    REQUIRE_THROWS_AS(
        make_backend(BackendKind::Resonant, p, InitState::parse("cavity1").amplitudes()),
        RegimeError);
}

TEST_CASE("peak finding and prominence") {
    const std::vector<double> ts{0, 1, 2, 3, 4};
    const std::vector<double> vs{0.0, 0.3, 0.25, 0.5, 0.1};
    const auto peaks = local_maxima(ts, vs);
    REQUIRE(peaks.size() == 2);
    REQUIRE(peaks[0].t == 1.0);
    REQUIRE(peaks[0].prominence == Approx(0.05).margin(1e-15));
    REQUIRE(peaks[1].t == 3.0);
    REQUIRE(peaks[1].prominence == Approx(0.4).margin(1e-15));

    // The ripple at t=1 is skipped; the pronounced peak at t=3 is first.
    const auto first = first_transfer_peak(ts, vs);
    REQUIRE(first.has_value());
    REQUIRE(first->t == 3.0);

    const auto mins = local_minima(ts, vs);
    REQUIRE(mins.size() == 1);
    REQUIRE(mins[0].t == 2.0);
}

TEST_CASE("golden-section refinement finds a quadratic maximum") {
    auto f = [](double t) { return 1.0 - (t - 2.34) * (t - 2.34); };
    const double t = refine_peak(f, 1.0, 3.0, 1e-9);
    REQUIRE(t == Approx(2.34).margin(1e-7));
}

TEST_CASE("beat envelope fit recovers delta from synthetic peaks") {
    const double delta = 0.045;
    const double nu = 1.00125;
    std::vector<double> ts, vs;
    for (double t = 0.0; t <= 160.0; t += 0.02) {
        ts.push_back(t);
        const Complex d = 0.5 * (std::polar(1.0, -delta * t) -
                                 Complex(std::cos(nu * t), 0.0));
        vs.push_back(std::norm(d));
    }
    const auto principal = principal_maxima(ts, vs, nu);
    REQUIRE(principal.size() >= 20);
    const double fitted = fit_beat_envelope(principal);
    REQUIRE(fitted == Approx(delta).epsilon(1e-3));
}

TEST_CASE("scan with a single point matches a direct simulation") {
    ScanRequest req;
    req.base = {1.0, 0.0, 0.1, 1000.0};
    req.parameter = ScanParameter::Hopping;
    req.from = 10.0;
    req.to = 10.0;
    req.points = 1;
    req.observable = ScanObservable::MaxTransferProb;
    req.horizon = 40.0;
    req.samples = 2001;
    const auto rows = run_scan(req);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].parameter == 10.0);

    const SimulationConfig cfg = fig1_config(2001);
    const TimeSeries series =
        sample_series(make_backend(cfg), {cfg.t_max, cfg.samples});
    double direct = 0.0;
    for (const auto& r : series.rows) direct = std::max(direct, r.p_atom2);
    REQUIRE(rows[0].value == Approx(direct).margin(1e-12));
}

TEST_CASE("first transfer time grows with hopping strength") {
    // Transfer rate |G|A ~ g^2/A in the large-hopping limit, so the first
    // transfer time grows close to linearly with A.
    ScanRequest req;
    req.base = {1.0, 0.0, 0.1, 1000.0};
    req.parameter = ScanParameter::Hopping;
    req.from = 1.0;
    req.to = 20.0;
    req.points = 20;
    req.observable = ScanObservable::FirstTransferTime;
    req.horizon = 45.0;
    req.samples = 8001;
    const auto rows = run_scan(req);
    REQUIRE(rows.size() == 20);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE_FALSE(std::isnan(rows[i].value));
        REQUIRE(rows[i].value > rows[i - 1].value);
    }
    // Doubling A from 10 to 20 roughly doubles the transfer time.
    const double ratio = rows[19].value / rows[9].value;
    REQUIRE(ratio == Approx(2.0).margin(0.4));
}

TEST_CASE("first transfer time grows with detuning on the far-detuned side") {
    ScanRequest req;
    req.base = {1.0, 10.0, 0.0, 1000.0};
    req.parameter = ScanParameter::Detuning;
    req.from = 20.0;
    req.to = 100.0;
    req.points = 3;
    req.observable = ScanObservable::FirstTransferTime;
    req.horizon = 2500.0;
    req.samples = 30001;
    const auto rows = run_scan(req);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].value > rows[i - 1].value);
    }
    // Dispersive prediction pi |delta1 delta2| / (2 g^2 A) at detuning 100.
    REQUIRE(rows[2].value == Approx(1555.09).epsilon(0.01));
}

TEST_CASE("scan observables") {
    // Beat frequency along a detuning sweep crossing the delta1 pole.
    ScanRequest req;
    req.base = {1.0, 5.0, 0.0, 1000.0};
    req.parameter = ScanParameter::Detuning;
    req.from = -5.0;
    req.to = 5.0;
    req.points = 3;  // detuning = -5 hits delta1 = 0
    req.observable = ScanObservable::BeatFrequency;
    const auto rows = run_scan(req);
    REQUIRE(rows.size() == 3);
    REQUIRE(std::isnan(rows[0].value));
    REQUIRE(rows[2].value == Approx(0.5 * 0.0 + 0.1).epsilon(1e-12));

    // First transfer time for the resonant point sits at pi/g.
    ScanRequest res;
    res.base = {1.0, 100.0, 100.0, 1000.0};
    res.parameter = ScanParameter::Hopping;
    res.from = 100.0;
    res.to = 100.0;
    res.points = 1;
    res.observable = ScanObservable::FirstTransferTime;
    res.horizon = 12.0;
    res.samples = 6001;
    const auto t_first = run_scan(res);
    REQUIRE(t_first[0].value == Approx(std::numbers::pi).epsilon(2e-4));
}
