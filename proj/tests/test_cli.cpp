#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef QHEX_CLI_PATH
#error "QHEX_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QHEX_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("count subcommand") {
    auto r = run_cli("count hexagon 1 1 1");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "2\n");

    REQUIRE(run_cli("count quartered 0 5 2 --dents 1,2").out == "1\n");
    REQUIRE(run_cli("count staircase 3 6 4").out == "182182\n");
}

TEST_CASE("formula subcommand agrees with counting") {
    REQUIRE(run_cli("formula macmahon 0 4 7").out == "1\n");
    REQUIRE(run_cli("formula proctor 3 6 4").out ==
            run_cli("count staircase 3 6 4").out);
    REQUIRE(run_cli("formula quartered 2 6 3 --dents 2,3").out ==
            run_cli("count quartered 2 6 3 --dents 2,3").out);
    REQUIRE(run_cli("formula quartered 2 5 3 --dents 2").out == "1056\n");
}

TEST_CASE("json output is schema-stable") {
    auto r = run_cli("--format json count quartered 2 6 3 --dents 2,3");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["family"] == "quartered");
    REQUIRE(j["params"] == nlohmann::json({2, 6, 3}));
    REQUIRE(j["dents"] == nlohmann::json({2, 3}));
    REQUIRE(j["value"] == "1848");
}

TEST_CASE("exit codes") {
    REQUIRE(run_cli("count hexagon 1 1 1").code == 0);
    REQUIRE(run_cli("count nosuchfamily 1 1 1").code == 2);
    REQUIRE(run_cli("count quartered 2 6 3 --dents 9,10").code == 2);
    REQUIRE(run_cli("bogus-subcommand").code == 2);
    REQUIRE(run_cli("verify --check identity --grid 4").code == 0);
}

TEST_CASE("region file input") {
    std::string path = "cli_region_fixture.txt";
    {
        std::ofstream out(path);
        out << "region hexagon copy\n";
        // unit hexagon cells
        out << "0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n";
    }
    auto r = run_cli("count --region-file " + path);
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "2\n");
    std::remove(path.c_str());
}

TEST_CASE("verify writes a report and reports failures via exit code") {
    auto ok = run_cli("verify --preset quick --out cli_verify_report.txt");
    INFO(ok.out);
    REQUIRE(ok.code == 0);
    REQUIRE(ok.out.find("all checks passed") != std::string::npos);
    std::ifstream rep("cli_verify_report.txt");
    REQUIRE(rep.good());
    std::string line;
    REQUIRE(std::getline(rep, line));
    std::remove("cli_verify_report.txt");
    std::remove("cli_verify_report.txt.csv");
}

TEST_CASE("render emits svg") {
    auto r = run_cli("render hexagon 1 1 1");
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("<svg") != std::string::npos);
    REQUIRE(std::count(r.out.begin(), r.out.end(), '\n') >= 6);

    auto tiled = run_cli("render hexagon 1 1 1 --tiling 0");
    REQUIRE(tiled.code == 0);
    // three lozenges drawn as three polygons plus the frame
    REQUIRE(std::count(tiled.out.begin(), tiled.out.end(), '<') ==
            3 + 3);  // svg, rect, 3 polygons, closing tag

    auto text = run_cli("render quartered 2 6 3 --dents 2,3 --render-format text");
    REQUIRE(text.code == 0);
    REQUIRE(text.out.find('^') != std::string::npos);
    REQUIRE(text.out.find('v') != std::string::npos);
}
