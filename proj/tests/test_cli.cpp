#include "doctest.h"

#include "wedge/cli.hpp"
#include "wedge/json_io.hpp"

#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace wedge;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream o, e;
    const int c = cli::run(args, o, e);
    return {c, o.str(), e.str()};
}

const std::string ground = R"({"system":"osc","family":"cyl","n_rho":0,"n_z":0,"n_phi":1,"phi0":6.283185307179586})";

}  // namespace

TEST_CASE("eval prints the ground state value")
{
    const Run r = run({"eval", "--state", ground, "--at", "rho=1,phi=1,z=0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["psi"].get<double>() == doctest::Approx(std::exp(-0.5) * std::sqrt(2 / 6.283185307179586) * std::sin(0.5)));
    CHECK(j["energy"].get<double>() == doctest::Approx(2.0));
    CHECK(j["state"]["mu"].get<double>() == doctest::Approx(0.5));
    // The emitted state parses back to the same state.
    CHECK(same_state(state_from_json(j["state"]), parse_state(ground)));
}

TEST_CASE("identical invocations give identical bytes")
{
    const std::vector<std::string> args = {"interbasis", "--system", "osc", "--N", "4", "--mu", "0.7"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("json formatting")
{
    ojson j = ojson::array({ojson::array({1.0, 0.0}), ojson::array({0.0, 1.0})});
    CHECK(dump_json(j) == "[[1.0,0.0],[0.0,1.0]]");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-2.0) == "-2.0");
    CHECK(format_double(1e300) == "1.0000000000000001e+300");
}

TEST_CASE("spectrum lists the N = 4 oscillator triplet in order")
{
    const Run r = run({"spectrum", "--system", "osc", "--family", "cyl", "--N", "4", "--mu", "0.5"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["states"].size() == 3);
    const int want[3][2] = {{2, 0}, {1, 2}, {0, 4}};
    for (int i = 0; i < 3; ++i) {
        CHECK(j["states"][i]["quantum_numbers"]["n_rho"] == want[i][0]);
        CHECK(j["states"][i]["quantum_numbers"]["n_z"] == want[i][1]);
        CHECK(j["states"][i]["abstract"] == true);
    }
}

TEST_CASE("ladder output")
{
    const Run r = run({"ladder", "--state", ground, "--dof", "axial", "--direction", "raise"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["to"]["quantum_numbers"]["n_z"] == 1);
    CHECK(j["energy_shift"].get<double>() == doctest::Approx(1.0));
    const Run d = run({"ladder", "--state", ground, "--dof", "radial", "--direction", "lower"});
    REQUIRE(d.code == 0);
    CHECK(nlohmann::json::parse(d.out)["annihilated"] == true);
}

TEST_CASE("spheroidal recurrence forms")
{
    const auto j = nlohmann::json::parse(run({"spheroidal", "--mu", "0.5", "--f", "1", "--N", "1", "--recurrence", "printed"}).out);
    CHECK(j["A"][0].get<double>() == doctest::Approx(-0.8));
    CHECK(j["A"][1].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("sample-grid writes row-major csv")
{
    const Run r = run({"sample-grid", "--state", ground, "--chart", "cylindrical", "--c1", "0.5:1:2", "--c2", "1:1:1", "--c3",
                       "-1:1:3"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "chart,c1,c2,c3,psi");
    CHECK(lines[1].rfind("cylindrical,0.5,1.0,-1.0,", 0) == 0);
    CHECK(lines[2].rfind("cylindrical,0.5,1.0,0.0,", 0) == 0);
    CHECK(lines[4].rfind("cylindrical,1.0,1.0,-1.0,", 0) == 0);

    const Run empty = run({"sample-grid", "--state", ground, "--chart", "cylindrical", "--c1", "0:1:0", "--c2", "0:1:2",
                           "--c3", "0:1:2"});
    REQUIRE(empty.code == 0);
    CHECK(empty.out == "chart,c1,c2,c3,psi\n");
}

TEST_CASE("output file")
{
    const std::string path = "test_cli_output.json";
    const Run r = run({"--output", path, "spheroidal", "--mu", "1", "--f", "0.5", "--N", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run({"spheroidal", "--mu", "1", "--f", "0.5", "--N", "2"}).out);
    std::remove(path.c_str());
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == cli::usage_error);
    CHECK(run({"frobnicate"}).code == cli::usage_error);
    CHECK(run({"eval", "--state", "{not json", "--at", "x=0,y=0,z=0"}).code == cli::usage_error);
    CHECK(run({"eval", "--state", ground, "--at", "x=1"}).code == cli::usage_error);
    CHECK(run({"eval", "--state", ground, "--at", "rho=1,phi=7,z=0"}).code == cli::usage_error);
    CHECK(run({"spheroidal", "--mu", "0.5", "--f", "-1", "--N", "1"}).code == cli::usage_error);
    CHECK(run({"--format", "csv", "spheroidal", "--mu", "0.5", "--f", "1", "--N", "1"}).code == cli::usage_error);
    CHECK(run({"interbasis", "--system", "osc", "--pair", "sph-par", "--N", "1", "--mu", "1"}).code == cli::usage_error);
    CHECK(run({"verify", "--suite", "nonsense"}).code == cli::usage_error);
}

TEST_CASE("verify honours WEDGE_TOL")
{
    const Run ok = run({"verify", "--suite", "ladders"});
    CHECK(ok.code == cli::ok);
    CHECK(nlohmann::json::parse(ok.out)["passed"] == true);

    setenv("WEDGE_TOL", "1e-300", 1);
    const Run strict = run({"verify", "--suite", "polynomials"});
    unsetenv("WEDGE_TOL");
    CHECK(strict.code == cli::verify_failed);
    const auto j = nlohmann::json::parse(strict.out);
    CHECK(j["passed"] == false);
    CHECK(!j["suites"][0]["failures"].empty());
}
