#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "ncwitt/json_io.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NCWITT_CLI_PATH) + " " + args + " 2>&1";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

nlohmann::json parse_out(const std::string& text) {
    return nlohmann::json::parse(text);
}

} // namespace

TEST_CASE("cli ghost computes projected ghost coordinates") {
    const CliResult r = run_cli("ghost --prime 2 --trunc 3 --coords \"X\"");
    REQUIRE(r.exit_code == 0);
    const auto doc = parse_out(r.out);
    REQUIRE(doc.at("ghost").size() == 3);
    CHECK(doc["ghost"][0]["text"] == "X");
    CHECK(doc["ghost"][1]["text"] == "X*X");
    CHECK(doc["ghost"][2]["text"] == "X*X*X*X");
}

TEST_CASE("cli ghost handles multiple coordinates and custom generators") {
    const CliResult r =
        run_cli("ghost --prime 2 --trunc 2 --coords \"a*b;b\" --gens a,b");
    REQUIRE(r.exit_code == 0);
    const auto doc = parse_out(r.out);
    CHECK(doc["ghost"][0]["text"] == "a*b");
    CHECK(doc["ghost"][1]["text"] == "2*b + a*b*a*b"); // necklace of (ab)^2 + 2b
}

TEST_CASE("cli necklace prints text then terms") {
    const CliResult r = run_cli("necklace \"Y*X - X*Y\"");
    REQUIRE(r.exit_code == 0);
    const std::size_t newline = r.out.find('\n');
    REQUIRE(newline != std::string::npos);
    CHECK(r.out.substr(0, newline) == "0");
    CHECK(parse_out(r.out.substr(newline + 1)).at("terms").empty());

    const CliResult s = run_cli("necklace --mod 2 \"(X*Y)^2 - X^2*Y^2\"");
    REQUIRE(s.exit_code == 0);
    const auto doc = parse_out(s.out.substr(s.out.find('\n') + 1));
    REQUIRE(doc.at("terms").size() == 2);
    CHECK(doc["terms"][0]["word"] == "X*X*Y*Y");
    CHECK(doc["terms"][1]["word"] == "X*Y*X*Y");
}

TEST_CASE("cli witt-add and witt-mul run the classical ring operations") {
    const CliResult add = run_cli("witt-add --prime 2 --a 1,0 --b 1,0");
    REQUIRE(add.exit_code == 0);
    const auto sum = parse_out(add.out);
    CHECK(sum.at("prime") == "2");
    CHECK(sum.at("coords") == nlohmann::json({"2", "-1"}));

    const CliResult mul = run_cli("witt-mul --prime 2 --a 0,1 --b 0,1");
    REQUIRE(mul.exit_code == 0);
    CHECK(parse_out(mul.out).at("coords") == nlohmann::json({"0", "2"}));
}

TEST_CASE("cli verify emits a report and exit code 0 on holding verdicts") {
    for (const std::string theorem :
         {"lemma-trace", "lemma-necklace", "thm-1-1", "thm-1-2"}) {
        const CliResult r = run_cli("verify --theorem " + theorem + " --prime 3");
        REQUIRE(r.exit_code == 0);
        const auto doc = parse_out(r.out);
        CHECK(doc.at("check") == theorem);
        CHECK(doc.at("verdict") == "holds");
    }
}

TEST_CASE("cli verify-sweep reports every check for every prime") {
    const CliResult r = run_cli("verify-sweep --max-prime 5");
    REQUIRE(r.exit_code == 0);
    const auto doc = parse_out(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 12);
    CHECK(doc[0].at("prime") == "2");
    CHECK(doc[11].at("prime") == "5");
    for (const auto& report : doc) {
        CHECK(report.at("verdict") == "holds");
    }
}

TEST_CASE("cli eval substitutes matrices from a file") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "ncwitt_cli_eval_test.json";
    {
        std::ofstream out(path);
        out << R"({"dimension": 2, "modulus": 2,
                   "assign": {"X": [[0,0],[1,0]], "Y": [[0,1],[0,0]]}})";
    }
    const CliResult r = run_cli("eval --matrices " + path.string() + " \"X*Y\"");
    std::filesystem::remove(path);
    REQUIRE(r.exit_code == 0);
    const auto doc = parse_out(r.out);
    CHECK(doc.at("entries") == nlohmann::json::parse(R"([["0","0"],["0","1"]])"));
}

TEST_CASE("cli reports input errors with exit code 2") {
    CHECK(run_cli("ghost --prime 4 --trunc 2 --coords X").exit_code == 2);
    CHECK(run_cli("ghost --prime 2 --trunc 1 --coords \"X;Y\"").exit_code == 2);
    CHECK(run_cli("necklace \"X +\"").exit_code == 2);
    CHECK(run_cli("necklace \"Q\"").exit_code == 2);
    CHECK(run_cli("witt-add --prime 2 --a 1,0 --b 1").exit_code == 2);
    CHECK(run_cli("verify --theorem nope --prime 2").exit_code == 2);
    CHECK(run_cli("eval --matrices /nonexistent.json X").exit_code == 2);
    CHECK(run_cli("").exit_code != 0);
}
