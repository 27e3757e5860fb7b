#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

// End-to-end checks against the built binary (path injected by CMake).

namespace {

using nlohmann::json;

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string command =
        env + (env.empty() ? "" : " ") + "'" + NONORTHO_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("search reports unit fidelity and one query") {
    const CliResult r = run_cli("search --bits 0110 --oracle reflection --seed 7");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.output);
    CHECK(report["schema"] == 1);
    CHECK(report["seed"] == 7);
    CHECK(report["result"]["n"] == 2);
    CHECK(report["result"]["target"] == "0110");
    CHECK(report["result"]["oracle_variant"] == "reflection");
    CHECK(report["result"]["queries"] == 1);
    CHECK(std::abs(report["result"]["fidelity"].get<double>() - 1.0) < 1e-10);
}

TEST_CASE("identical command lines produce byte-identical reports") {
    const std::string commands[] = {
        "search --bits 100110 --oracle diagonal --seed 41",
        "sample --bits 0110 --trials 5 --seed 3 --format csv",
        "bench --mode coupon --n 4 --trials 500 --seed 11",
        "tree --random --depth 4 --seed 13",
    };
    for (const std::string& cmd : commands) {
        const CliResult a = run_cli(cmd);
        const CliResult b = run_cli(cmd);
        REQUIRE(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK_FALSE(a.output.empty());
    }
}

TEST_CASE("bench output does not depend on the worker count") {
    const CliResult serial = run_cli("bench --mode coupon --n 4 --trials 2000 --seed 5 --jobs 1");
    const CliResult parallel = run_cli("bench --mode coupon --n 4 --trials 2000 --seed 5 --jobs 4");
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(serial.output == parallel.output);
}

TEST_CASE("encode reports the codeword amplitudes on the wire") {
    const CliResult r = run_cli("encode --bits 0000");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.output);
    const json& amps = report["codeword"]["amplitudes"];
    REQUIRE(amps.size() == 2);
    for (int i = 0; i < 2; ++i) {
        CHECK(amps[static_cast<std::size_t>(i)]["alpha"] == i);
        CHECK(amps[static_cast<std::size_t>(i)]["p"] == 0);
        CHECK(amps[static_cast<std::size_t>(i)]["q"] == 0);
        CHECK(std::abs(amps[static_cast<std::size_t>(i)]["re"].get<double>() -
                       1.0 / std::sqrt(2.0)) < 1e-12);
    }
}

TEST_CASE("encode and decode round trip through a file") {
    const std::string path = "/tmp/nonortho_test_codeword.json";
    const CliResult enc = run_cli("encode --bits 110 --out " + path);
    REQUIRE(enc.exit_code == 0);

    std::ifstream file(path);
    REQUIRE(file.good());
    const json report = json::parse(file);
    CHECK(report["bits"] == "0110");  // odd input padded on the left
    CHECK(report["space"]["strings"] == 16);
    CHECK(report["space"]["qubits_standard"] == 4);
    CHECK(report["space"]["qubits_nonorthogonal"] == 3);
    CHECK(report["space"]["dimension"] == 8);

    const CliResult dec = run_cli("decode --in " + path);
    REQUIRE(dec.exit_code == 0);
    CHECK(json::parse(dec.output)["bits"] == "0110");
    std::remove(path.c_str());
}

TEST_CASE("sample emits the per-trial CSV rows") {
    const CliResult r = run_cli("sample --bits 0110 --trials 4 --seed 3 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("n,seed,runs,completed,conflict\n") != std::string::npos);
    // four data rows, all complete and conflict-free
    int complete_rows = 0;
    std::size_t pos = 0;
    while ((pos = r.output.find(",1,0\n", pos)) != std::string::npos) {
        ++complete_rows;
        pos += 1;
    }
    CHECK(complete_rows == 4);
}

TEST_CASE("coupon bench mean lands near the closed form") {
    const CliResult r = run_cli("bench --mode coupon --n 8 --trials 100000 --seed 1");
    REQUIRE(r.exit_code == 0);
    const std::size_t header = r.output.find("mean_runs");
    REQUIRE(header != std::string::npos);
    const std::size_t line = r.output.find('\n', header) + 1;
    // row: n,seed,trials,mean_runs,...
    std::size_t field = line;
    for (int skip = 0; skip < 3; ++skip) {
        field = r.output.find(',', field) + 1;
    }
    const double mean = std::stod(r.output.substr(field));
    CHECK(std::abs(mean - 21.742857142857144) / 21.742857142857144 < 0.02);
}

TEST_CASE("tree bench emits per-instance rows") {
    const CliResult r = run_cli("bench --mode tree --depth 3 --trials 5 --seed 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("depth,classical_examined,quantum_queries,measurement_runs,seed\n") !=
          std::string::npos);
    // five rows, each reporting one oracle query
    int rows = 0;
    std::size_t pos = 0;
    while ((pos = r.output.find("\n3,", pos)) != std::string::npos) {
        ++rows;
        ++pos;
    }
    CHECK(rows == 5);
}

TEST_CASE("tree search runs end to end on a random instance") {
    const CliResult r = run_cli("tree --random --depth 5 --seed 21");
    REQUIRE(r.exit_code == 0);
    const json report = json::parse(r.output);
    CHECK(report["depth"] == 5);
    CHECK(report["oracle_queries"] == 1);
    CHECK(report["measurement_runs"].get<int>() >= 5);
    CHECK(report["classical_examined"].get<int>() >= 1);
    CHECK(report["path"].size() == 5);
    CHECK(report["bits"].get<std::string>().size() == 10);
}

TEST_CASE("exit codes distinguish usage, guard and io errors") {
    CHECK(run_cli("search --bits 01a0").exit_code == 2);
    CHECK(run_cli("search").exit_code == 2);               // missing --bits
    CHECK(run_cli("nonsense-command").exit_code == 2);
    CHECK(run_cli("bench --mode standard --num-bits 18").exit_code == 3);
    CHECK(run_cli("encode --bits 00 --out /no-such-dir/out.json").exit_code == 4);
    CHECK(run_cli("decode --in /no-such-file.json").exit_code == 4);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("NONORTHO_SEED supplies the default seed") {
    const CliResult r = run_cli("search --bits 01", "NONORTHO_SEED=909");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.output)["seed"] == 909);

    // explicit flag wins over the environment
    const CliResult flag = run_cli("search --bits 01 --seed 4", "NONORTHO_SEED=909");
    CHECK(json::parse(flag.output)["seed"] == 4);

    CHECK(run_cli("search --bits 01", "NONORTHO_SEED=bogus").exit_code == 2);
}
