#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using Catch::Approx;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string out_path = "cli_out_" + std::to_string(counter) + ".txt";
    const std::string err_path = "cli_err_" + std::to_string(counter) + ".txt";
    ++counter;

    const std::string cmd = std::string(CCDYN_CLI_PATH) + " " + args + " > " +
                            out_path + " 2> " + err_path;
    const int raw = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("simulate emits a stable CSV schema and is deterministic") {
    const std::string args =
        "simulate --model oracle --hopping 100 --detuning 100 --omega-f 1000 "
        "--t-max 12 --samples 301";
    const CliResult a = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out.starts_with(
        "t,p_atom1,p_atom2,p_cav1,p_cav2,p_field_total,p_mode_m1,p_mode_m2,norm\n"));
    REQUIRE(count_lines(a.out) == 302);

    const CliResult b = run_cli(args);
    REQUIRE(a.out == b.out);
}

TEST_CASE("zero-length simulation emits two identical initial rows") {
    const CliResult r = run_cli("simulate --model exact --t-max 0 --samples 2");
    REQUIRE(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string header, row1, row2;
    std::getline(is, header);
    std::getline(is, row1);
    std::getline(is, row2);
    REQUIRE(row1 == row2);
    REQUIRE(row1.starts_with("0,1,"));  // p_atom1 = 1 at t = 0
}

TEST_CASE("usage errors exit with code 2") {
    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("simulate --model oracle").exit_code == 2);  // missing t-max
    REQUIRE(run_cli("simulate --model bogus --t-max 1").exit_code == 2);
    REQUIRE(run_cli("simulate --model oracle --t-max 1 --bogus-flag 3").exit_code ==
            2);
    REQUIRE(run_cli("scan --from 1 --to 2 --points 2 --observable bogus")
                .exit_code == 2);
    REQUIRE(run_cli("simulate --model oracle --t-max 1 --init nonsense")
                .exit_code == 2);
    REQUIRE(run_cli("simulate --model oracle --t-max 1 --init 9,0").exit_code ==
            2);
    REQUIRE(run_cli("simulate --model oracle --t-max 1 --samples 1").exit_code ==
            2);
}

TEST_CASE("regime singularities exit with code 3") {
    const CliResult r = run_cli(
        "simulate --model dispersive --hopping 100 --detuning 100 --t-max 1");
    REQUIRE(r.exit_code == 3);
    REQUIRE(r.err.find("resonant") != std::string::npos);

    REQUIRE(run_cli("transfer-times --regime dispersive --hopping 1 --detuning 1")
                .exit_code == 3);
    // Resonant backend with a field initial state is a regime misuse.
    REQUIRE(run_cli("simulate --model resonant --hopping 100 --detuning 100 "
                    "--t-max 1 --init cavity1")
                .exit_code == 3);
}

TEST_CASE("compare reports deviations as JSON") {
    const CliResult r = run_cli(
        "compare --model exact --model-b oracle --hopping 10 --detuning 0.1 "
        "--t-max 40 --samples 401");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("max_dev").get<double>() <= 1e-9);
    REQUIRE(j.at("rms_dev").get<double>() <= 1e-9);
    REQUIRE(j.at("models").at(0) == "exact");
    REQUIRE(j.at("grid").at("samples") == 401);

    const CliResult same = run_cli(
        "compare --model oracle --model-b oracle --hopping 10 --detuning 0.1 "
        "--t-max 20 --samples 101");
    REQUIRE(same.exit_code == 0);
    REQUIRE(nlohmann::json::parse(same.out).at("max_dev").get<double>() == 0.0);

    // Dispersive vs full Hamiltonian: deviation is the neglected field
    // amplitude scale.
    const CliResult disp = run_cli(
        "compare --model dispersive --model-b oracle --hopping 10 "
        "--detuning 0.1 --t-max 40 --samples 4001");
    REQUIRE(disp.exit_code == 0);
    const double dev = nlohmann::json::parse(disp.out).at("max_dev").get<double>();
    REQUIRE(dev == Approx(0.196).margin(0.015));

    // Near-resonant comparisons carry the t g^2/delta1 validity indicator.
    const CliResult nr = run_cli(
        "compare --model near-resonant --model-b oracle --hopping 100.1 "
        "--detuning 100 --t-max 160 --samples 2001");
    REQUIRE(nr.exit_code == 0);
    const auto jnr = nlohmann::json::parse(nr.out);
    REQUIRE(jnr.contains("validity_t_g2_over_delta1"));
    REQUIRE(jnr.at("validity_t_g2_over_delta1").get<double>() ==
            Approx(160.0 / 200.1).epsilon(1e-12));
}

TEST_CASE("transfer-times tables") {
    const CliResult r = run_cli(
        "transfer-times --regime resonant --hopping 100 --detuning 100 "
        "--omega-f 900 --n-max 2");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.starts_with("n,tau,omega_ok,l,residual\n"));
    REQUIRE(count_lines(r.out) == 4);
    REQUIRE(r.out.find("3.1415926535897931,1,500,") != std::string::npos);

    const CliResult d = run_cli(
        "transfer-times --regime dispersive --hopping 10 --detuning 0.1 "
        "--n-max 1 --format json");
    REQUIRE(d.exit_code == 0);
    const auto j = nlohmann::json::parse(d.out);
    REQUIRE(j.at("rows").size() == 2);
    REQUIRE(j.at("rows").at(0).at(1).get<double>() ==
            Approx(15.70639247162217).epsilon(1e-12));
}

TEST_CASE("scan emits one row per point") {
    const CliResult r = run_cli(
        "scan --param hopping --from 10 --to 10 --points 1 "
        "--observable max-transfer-prob --detuning 0.1 --t-max 40 "
        "--samples 2001");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.starts_with("hopping,max-transfer-prob\n"));
    REQUIRE(count_lines(r.out) == 2);

    const CliResult j = run_cli(
        "scan --param detuning --from 0 --to 5 --points 3 "
        "--observable beat-frequency --hopping 5 --format json");
    REQUIRE(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    REQUIRE(parsed.at("rows").size() == 3);
}

TEST_CASE("output flag writes the file instead of stdout") {
    const std::string path = "cli_file_out.csv";
    const CliResult r = run_cli(
        "simulate --model exact --t-max 1 --samples 11 --output " + path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.empty());
    const std::string text = slurp(path);
    REQUIRE(text.starts_with("t,p_atom1"));
    REQUIRE(count_lines(text) == 12);
    std::remove(path.c_str());
}

TEST_CASE("regime mismatch warnings go to stderr") {
    const CliResult r = run_cli(
        "simulate --model resonant --hopping 10 --detuning 0.1 --t-max 1");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.err.find("warning") != std::string::npos);
}

TEST_CASE("json simulate output echoes the scaled configuration") {
    const CliResult r = run_cli(
        "simulate --model oracle --g 2 --hopping 10 --detuning 0.1 "
        "--t-max 40 --samples 51 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("config").at("g").get<double>() == 2.0);
    REQUIRE(j.at("config").at("hopping").get<double>() == 20.0);
    REQUIRE(j.at("config").at("t_max").get<double>() == 20.0);
    REQUIRE(j.at("rows").size() == 51);
}
