#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SPIN7_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

std::vector<double> csv_row(const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) out.push_back(std::stod(cell));
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("flow on regular initial data") {
    RunResult r = run_cli(
        "flow --a0 1.1180339887498949 --b0 -0.74535599249992989 "
        "--c0 1.2247448713915890 --t1 1 --tol 1e-6");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() > 2);
    CHECK(ls[0] == "t,a,b,c,ricci_residual,el_residual,TplusV");
    auto last = csv_row(ls.back());
    REQUIRE(last.size() == 7);
    CHECK(last[0] == doctest::Approx(1.0));
    CHECK(last[4] < 1e-8);  // ricci residual on the final row
}

TEST_CASE("flat initial data gives the straight line a = a0 + t/2") {
    RunResult r = run_cli("flow --a0 1 --b0 -1 --c0 1 --t1 2 --tol 1e-6");
    CHECK(r.code == 0);
    auto last = csv_row(lines_of(r.out).back());
    REQUIRE(last.size() == 7);
    CHECK(last[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(last[2] == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(last[3] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("flow rejects an empty range") {
    CHECK(run_cli("flow --t1 0").code == 1);
    CHECK(run_cli("flow --no-such-flag 3").code == 1);
    CHECK(run_cli("").code == 1);
}

TEST_CASE("flow reports a singular trajectory with partial output") {
    RunResult r = run_cli("flow --a0 0.5 --b0 -5 --c0 1 --t1 2 --tol 1e-6");
    CHECK(r.code == 2);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() > 1);  // header plus at least part of the trajectory
    CHECK(ls[0] == "t,a,b,c,ricci_residual,el_residual,TplusV");
    auto last = csv_row(ls.back());
    CHECK(last[0] < 2.0);  // stopped before the requested end
}

TEST_CASE("classify emits the pinned JSON shape") {
    RunResult r0 = run_cli("classify --k 0");
    CHECK(r0.code == 0);
    auto j0 = nlohmann::json::parse(r0.out);
    CHECK(j0["branch"] == "B8");

    RunResult ra = run_cli("classify --k 0 --negative-v");
    CHECK(nlohmann::json::parse(ra.out)["branch"] == "A8");

    RunResult rm = run_cli("classify --k 1");
    auto jm = nlohmann::json::parse(rm.out);
    CHECK(jm["branch"] == "B8minus");
    CHECK(std::fabs(jm["z0"].get<double>() - 0.96978804898765349) < 1e-10);

    RunResult rp = run_cli("classify --kappa 0");
    auto jp = nlohmann::json::parse(rp.out);
    CHECK(jp["branch"] == "B8plus");
    CHECK(std::fabs(jp["y0"].get<double>() - 0.90680530752411913) < 1e-10);
    CHECK(jp.contains("circle_radius_sq"));
    CHECK(jp.contains("bolt"));

    CHECK(run_cli("classify --k -1").code == 1);
}

TEST_CASE("metric family samples") {
    RunResult r = run_cli("metric --family A8 --r-min 3 --r-max 4 --samples 2");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "r,g_rr,coef_S4,coef_R12,coef_R3,a,b,c");
    auto row = csv_row(ls[1]);
    CHECK(row[1] == doctest::Approx(4.0 / 3).epsilon(1e-14));
    CHECK(row[2] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(row[3] == doctest::Approx(12.0).epsilon(1e-14));
    CHECK(row[4] == doctest::Approx(3.0).epsilon(1e-14));

    CHECK(run_cli("metric --family A8 --r-min 0.5 --r-max 2 --samples 3").code == 1);
    CHECK(run_cli("metric --family Nope --r-min 2 --r-max 3").code == 1);
}

TEST_CASE("metric chart samples") {
    RunResult r = run_cli("metric --k 1 --r-min 0.98 --r-max 0.99 --samples 2");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "coord,v,g_chart,coef_S4,coef_R12,coef_R3");
    auto row = csv_row(ls[1]);
    CHECK(row[1] == doctest::Approx(2.4464345590809296).epsilon(1e-12));
    CHECK(row[3] == doctest::Approx(3.8780818013888974).epsilon(1e-10));
}

TEST_CASE("harmonic summary") {
    RunResult r = run_cli("harmonic --family B8 --label minus --samples 4");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["normalisable"] == true);
    CHECK(std::fabs(j["l2_integral"].get<double>() - 189.0 / 16) < 1e-4);
    CHECK(j["relation"]["exists"] == true);

    RunResult rp = run_cli("harmonic --family A8 --label plus");
    CHECK(rp.code == 0);
    auto jp = nlohmann::json::parse(rp.out);
    CHECK(jp["normalisable"] == false);
    CHECK(jp["transport"]["note"] == "non-L2 branch detected");
}

TEST_CASE("phase portrait grid and determinism") {
    RunResult r = run_cli("phase-portrait --nz 12 --nv 7");
    CHECK(r.code == 0);
    auto ls = lines_of(r.out);
    REQUIRE(ls.size() == 1 + 12 * 7);
    CHECK(ls[0] == "z,v,dz_dtau,dv_dtau");

    // identical configuration, bit-identical bytes
    RunResult r2 = run_cli("phase-portrait --nz 12 --nv 7");
    CHECK(r.out == r2.out);

    run_cli("phase-portrait --nz 6 --nv 6 --out pp_a.csv --trajectories tr_a.csv");
    run_cli("phase-portrait --nz 6 --nv 6 --out pp_b.csv --trajectories tr_b.csv");
    CHECK(slurp("pp_a.csv") == slurp("pp_b.csv"));
    CHECK(slurp("tr_a.csv") == slurp("tr_b.csv"));
    CHECK(!slurp("tr_a.csv").empty());
    std::remove("pp_a.csv");
    std::remove("pp_b.csv");
    std::remove("tr_a.csv");
    std::remove("tr_b.csv");
}

TEST_CASE("verify superpotential") {
    RunResult r = run_cli("verify superpotential");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(run_cli("verify nonsense").code == 1);
}

}  // TEST_SUITE
