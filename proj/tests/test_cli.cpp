#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qac/suites.hpp"

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(QAC_CLI_PATH) + " " + args;
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string data = QAC_DATA_DIR;

} // namespace

TEST_CASE("cli exit code contract") {
    CHECK(run("invariants --type A2~1 'V(1)[(-q)^-2]' 'V(1)[(-q)^-2]' > cli_out1.txt") == 0);
    CHECK(run("de-table --type A1~1 'V(1)[q^-1]' 'V(1)[q^1]' > /dev/null") == 0);
    CHECK(run("commutes --type A1~1 'V(1)[q^0]' 'V(1)[q^4]' > /dev/null") == 0);
    CHECK(run("spectrum --type A1~1 'V(1)[q^-1]' 'V(1)[q^1]' > /dev/null") == 0);
    CHECK(run("suite gfun --n 25 --seed 3 > /dev/null") == 0);

    SUBCASE("usage and parse errors exit 2") {
        CHECK(run("frobnicate 2> /dev/null") == 2);
        CHECK(run("invariants --type A2~1 'V(9)[q^1]' '1' 2> /dev/null") == 2);
        CHECK(run("invariants --type A2~1 'V(1)[q^1' '1' 2> /dev/null") == 2);
        CHECK(run("suite nosuch 2> /dev/null") == 2);
        CHECK(run("mutate no_such_file.json 2> /dev/null") == 2);
        CHECK(run(std::string("mutate ") + data + "/seed_rank2.json -k 2 2> /dev/null") == 2);
    }
}

TEST_CASE("cli json output is byte stable") {
    std::string cmd = "invariants --type A2~1 'V(1)[(-q)^-2]' 'V(1)[(-q)^-2]' --json > ";
    REQUIRE(run(cmd + "cli_json_a.txt") == 0);
    REQUIRE(run(cmd + "cli_json_b.txt") == 0);
    std::string a = slurp("cli_json_a.txt"), b = slurp("cli_json_b.txt");
    CHECK(a == b);
    CHECK(a.find("\"lambda_tilde\": -1") != std::string::npos);
}

TEST_CASE("cli mutate round trip") {
    std::string seed_file = data + "/seed_rank2.json";
    REQUIRE(run("mutate " + seed_file + " > cli_seed_id.json") == 0);
    REQUIRE(run("mutate " + seed_file + " -k 1 -k 1 > cli_seed_kk.json") == 0);
    CHECK(slurp("cli_seed_id.json") == slurp("cli_seed_kk.json"));

    REQUIRE(run("mutate " + seed_file + " -k 1 -o cli_seed_m.json") == 0);
    CHECK(run("mutate cli_seed_m.json -k 1 > cli_seed_back.json") == 0);
    CHECK(slurp("cli_seed_back.json") == slurp("cli_seed_id.json"));
}

TEST_CASE("cli seed check") {
    CHECK(run("seed-check " + data + "/monoidal_a1.json > /dev/null") == 0);
    CHECK(run("seed-check " + data + "/monoidal_a1_admissible.json --search 1 --grid 6 "
              "> cli_sc.txt") == 0);
    std::string out = slurp("cli_sc.txt");
    CHECK(out.find("numerically consistent") != std::string::npos);
    CHECK(out.find("V(1)[q^2]") != std::string::npos);
}

TEST_CASE("suite runner is deterministic") {
    using namespace qac;
    SuiteResult a = run_suite("invariants", 40, 99);
    SuiteResult b = run_suite("invariants", 40, 99);
    REQUIRE(a.properties.size() == b.properties.size());
    for (size_t i = 0; i < a.properties.size(); ++i) {
        CHECK(a.properties[i].name == b.properties[i].name);
        CHECK(a.properties[i].checks == b.properties[i].checks);
        CHECK(a.properties[i].failures == b.properties[i].failures);
    }
    CHECK_THROWS_AS(run_suite("nope", 1, 1), std::invalid_argument);
    CHECK(suite_names().size() == 4);
}
