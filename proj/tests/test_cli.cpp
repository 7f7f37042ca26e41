// Drives the installed CLI end to end: output contracts, exit codes, file
// round trips. The binary path comes in through LPSUM_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "lpsum/constructions.hpp"
#include "lpsum/tensor_io.hpp"

using namespace lpsum;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string("\"") + LPSUM_CLI_PATH + "\" " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("lpsum_cli_test_" + name);
}

}  // namespace

TEST_CASE("exponent command emits the documented json") {
    const auto res = run_cli("exponent --kind polynomial --u 1 --q 2 --p inf --m 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "{\"rho\":\"4/3\",\"case\":\"II_A\",\"optimal_known\":true}\n");

    const auto zal = run_cli("exponent --kind zalduendo --p 4 --m 2");
    CHECK(zal.exit_code == 0);
    CHECK(json::parse(zal.output)["rho"] == "2");

    const auto bc = run_cli("exponent --kind bennett-carl --u 1 --q 4/3");
    CHECK(json::parse(bc.output)["rho"] == "4/3");

    const auto cot = run_cli("exponent --kind cotype --q inf");
    CHECK(json::parse(cot.output)["rho"] == "inf");
    CHECK(json::parse(cot.output)["no_finite_cotype"] == true);
}

TEST_CASE("domain errors exit with code 2 and cite the condition") {
    const auto res = run_cli("exponent --kind praciano --p 2,2", true);
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("necessary") != std::string::npos);

    const auto oor = run_cli("exponent --kind lp-valued --u 2 --q 4 --p 2,4", true);
    CHECK(oor.exit_code == 2);
}

TEST_CASE("parse errors exit with code 3") {
    const auto res = run_cli("exponent --kind polynomial --u nope --q 2 --p inf --m 2", true);
    CHECK(res.exit_code == 3);
    const auto bad_kind = run_cli("exponent --kind fancy --q 2", true);
    CHECK(bad_kind.exit_code == 3);
}

TEST_CASE("construction files round trip bit-exactly") {
    const auto file = temp_file("fourier.json");
    const auto res = run_cli("construct --family fourier --n 5 --p 8,8 --u 1 --out \"" + file.string() + "\"");
    REQUIRE(res.exit_code == 0);
    const auto meta = json::parse(res.output);
    CHECK(meta["m"] == 2);
    CHECK(meta["target_dim"] == 5);

    const CoefficientTensor reread = load_tensor(file);
    const auto direct = fourier_vector(5, {ExtExponent(8), ExtExponent(8)}, ExtExponent(1));
    REQUIRE(reread.entries().size() == direct.tensor.entries().size());
    for (std::size_t i = 0; i < reread.entries().size(); ++i)
        CHECK(reread.entries()[i] == direct.tensor.entries()[i]);
    std::filesystem::remove(file);
}

TEST_CASE("norm command on a diagonal tensor file") {
    const auto file = temp_file("diag.json");
    {
        const auto c = diagonal_scalar(4, {ExtExponent(4), ExtExponent(4)});
        save_tensor(file, c.tensor);
    }
    const auto res = run_cli("norm --tensor \"" + file.string() + "\" --p 4,4 --restarts 8");
    REQUIRE(res.exit_code == 0);
    const auto report = json::parse(res.output);
    CHECK(std::abs(report["value"].get<double>() - 2.0) <= 1e-6);
    CHECK(report["seed"] == 42);  // default echoed

    const auto wrong_arity = run_cli("norm --tensor \"" + file.string() + "\" --p 4", true);
    CHECK(wrong_arity.exit_code == 2);

    const auto missing = run_cli("norm --tensor /nonexistent.json --p 4,4", true);
    CHECK(missing.exit_code == 3);

    const auto malformed = temp_file("broken.json");
    std::ofstream(malformed) << "{ not json";
    const auto bad = run_cli("norm --tensor \"" + malformed.string() + "\" --p 4,4", true);
    CHECK(bad.exit_code == 3);
    std::filesystem::remove(file);
    std::filesystem::remove(malformed);
}

TEST_CASE("vector-valued tensors flow through norm with --u") {
    const auto file = temp_file("diag_vec.json");
    const auto made =
        run_cli("construct --family diagonal-vector --n 6 --p 8,8 --u 2 --out \"" + file.string() + "\"");
    REQUIRE(made.exit_code == 0);
    const double bound = json::parse(made.output)["norm_upper_bound"].get<double>();

    const auto res = run_cli("norm --tensor \"" + file.string() + "\" --p 8,8 --u 2 --restarts 8");
    REQUIRE(res.exit_code == 0);
    CHECK(std::abs(json::parse(res.output)["value"].get<double>() - bound) <= 1e-9);

    const auto missing_u = run_cli("norm --tensor \"" + file.string() + "\" --p 8,8", true);
    CHECK(missing_u.exit_code == 2);
    std::filesystem::remove(file);
}

TEST_CASE("t auto resolves to the matching exponent invocation") {
    const auto sweep =
        run_cli("verify --family fourier --u 1 --q 2 --p 8,8 --t auto --format json --norm-source analytic");
    REQUIRE(sweep.exit_code == 0);
    const auto report = json::parse(sweep.output);
    const auto direct = run_cli("exponent --kind lp-valued --u 1 --q 2 --p 8,8 --case I_B");
    REQUIRE(direct.exit_code == 0);
    CHECK(report["t"] == json::parse(direct.output)["rho"]);
    CHECK(report["pass"] == true);  // ratios flat at the witnessed exponent

    const auto diag = run_cli("growth --family diagonal --p 4,4 --t auto --format json");
    const auto praciano = run_cli("exponent --kind praciano --p 4,4");
    CHECK(json::parse(diag.output)["t"] == json::parse(praciano.output)["rho"]);
}

TEST_CASE("growth slopes flag non-summable exponents") {
    const auto flat = run_cli("growth --family diagonal --p 4,4 --t 2 --n 4,8,16,32 --format json");
    REQUIRE(flat.exit_code == 0);
    const auto flat_report = json::parse(flat.output);
    CHECK(std::abs(flat_report["slope"].get<double>()) <= 0.02);
    CHECK(flat_report["pass"] == true);

    const auto steep = run_cli("growth --family diagonal --p 4,4 --t 1.5 --n 4,8,16,32 --format json");
    const auto steep_report = json::parse(steep.output);
    CHECK(steep_report["slope"].get<double>() >= 0.1);
    CHECK(steep_report["pass"] == false);
    CHECK(std::abs(steep_report["expected_exponent"].get<double>() - 1.0 / 6.0) <= 1e-12);
}

TEST_CASE("region violations in sweeps exit with code 2") {
    const auto res = run_cli("growth --family diagonal --p 2,2 --t 2", true);
    CHECK(res.exit_code == 2);
}

TEST_CASE("default sweep output is csv plus a json summary") {
    const auto res = run_cli("verify --family diagonal --p 4,4 --t 2 --n 4,8,16 --norm-source analytic");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.rfind("n,lhs,norm,ratio\n", 0) == 0);
    const auto last_newline = res.output.find_last_of('\n', res.output.size() - 2);
    const auto summary = json::parse(res.output.substr(last_newline + 1));
    CHECK(summary["family"] == "diagonal");
}
