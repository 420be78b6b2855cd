// End-to-end tests of the command-line binary; its path is injected by the
// build as QSTEP_CLI_PATH.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string(QSTEP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        res.out.append(buf, got);
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream is(line);
    std::string field;
    while (std::getline(is, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

TEST_CASE("potential table defaults") {
    const auto res = run_cli("potential");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 402);  // header + 401 samples
    CHECK(lines[0] == "x,V_delta_0.5,V_delta_1,V_delta_2,V_delta_10");
    // the midpoint row carries V = v0/2 for every sharpness
    const auto mid = fields_of(lines[201]);
    REQUIRE(mid.size() == 5);
    CHECK(mid[0] == "0");
    for (int i = 1; i < 5; ++i) CHECK(std::stod(mid[i]) == 0.5);
}

TEST_CASE("coefficient sweep hits reference values") {
    const auto res = run_cli("coeffs --ratio 2 --delta 0.5,10");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "ratio,R_delta_0.5,T_delta_0.5,R_delta_10,T_delta_10");
    const auto row = fields_of(lines[1]);
    REQUIRE(row.size() == 5);
    CHECK(std::stod(row[1]) ==
          doctest::Approx(2.989783325517548e-06).epsilon(1e-12));
    CHECK(std::stod(row[2]) ==
          doctest::Approx(0.9999970102166745).epsilon(1e-12));
    CHECK(std::stod(row[3]) ==
          doctest::Approx(0.028105426995664033).epsilon(1e-11));
    CHECK(std::stod(row[1]) + std::stod(row[2]) == doctest::Approx(1.0));
}

TEST_CASE("default coefficient sweep spans 0.01..3.00") {
    const auto res = run_cli("coeffs --delta 1");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 301);
    CHECK(fields_of(lines[1])[0] == "0.01");
    CHECK(fields_of(lines[300])[0] == "3");
    // below and at threshold every row reads R = 1, T = 0
    for (int i = 1; i <= 100; ++i) {
        const auto row = fields_of(lines[i]);
        CHECK(row[1] == "1");
        CHECK(row[2] == "0");
    }
}

TEST_CASE("wavefunction scan single set") {
    const auto res = run_cli("wave --delta 0.5 --ratio 2");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 402);
    CHECK(lines[0] == "x,re_psi,im_psi,density,current");
    const auto mid = fields_of(lines[201]);  // x = 0 lands mid-grid
    REQUIRE(mid.size() == 5);
    CHECK(mid[0] == "0");
    CHECK(std::stod(mid[1]) ==
          doctest::Approx(1.0422740286593095).epsilon(1e-10));
    CHECK(std::stod(mid[2]) ==
          doctest::Approx(-0.250145642902135).epsilon(1e-10));
    // current column is flat across the scan
    double j_min = 1e300, j_max = -1e300;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const double j = std::stod(fields_of(lines[i])[4]);
        j_min = std::min(j_min, j);
        j_max = std::max(j_max, j);
    }
    CHECK(j_max - j_min < 1e-8 * std::abs(j_max));
}

TEST_CASE("figure presets") {
    SUBCASE("threshold sweep over sharpness") {
        const auto res = run_cli("wave --figure 2 --samples 51");
        CHECK(res.exit_code == 0);
        const auto lines = lines_of(res.out);
        REQUIRE(lines.size() == 1 + 4 * 51);
        CHECK(lines[0] == "delta,ratio,x,re_psi,im_psi,density,current");
        for (std::size_t i = 1; i < lines.size(); ++i) {
            CHECK(fields_of(lines[i])[1] == "1");
        }
        CHECK(fields_of(lines[1])[0] == "0.5");
        CHECK(fields_of(lines.back())[0] == "10");
    }
    SUBCASE("soft step below the barrier") {
        const auto res = run_cli("wave --figure 4 --samples 21");
        CHECK(res.exit_code == 0);
        const auto lines = lines_of(res.out);
        REQUIRE(lines.size() == 1 + 4 * 21);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            CHECK(fields_of(lines[i])[0] == "0.5");
        }
        CHECK(fields_of(lines[1])[1] == "0.1");
        CHECK(fields_of(lines.back())[1] == "0.9");
    }
    SUBCASE("presets exclude manual parameter lists") {
        CHECK(run_cli("wave --figure 3 --delta 1").exit_code == 2);
    }
}

TEST_CASE("limit table shows monotone approach to the sharp step") {
    const auto res = run_cli("limit");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.out);
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] ==
          "delta,R,R_sharp_limit,abs_R_diff,abs_D_diff_below,abs_B_diff_below");
    double prev_r = 1e300, prev_d = 1e300;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto row = fields_of(lines[i]);
        const double r_diff = std::stod(row[3]);
        const double d_diff = std::stod(row[4]);
        CHECK(r_diff < prev_r);
        CHECK(d_diff < prev_d);
        prev_r = r_diff;
        prev_d = d_diff;
    }
    // delta = 10 sits within 2e-3 of the limit but measurably off it;
    // delta = 50 within about 5e-5
    const auto row10 = fields_of(lines[4]);
    CHECK(std::stod(row10[0]) == 10.0);
    CHECK(std::stod(row10[3]) < 2e-3);
    CHECK(std::stod(row10[3]) > 1e-4);
    const auto row50 = fields_of(lines[6]);
    CHECK(std::stod(row50[3]) < 1e-4);
}

TEST_CASE("validation battery exit codes") {
    CHECK(run_cli("validate").exit_code == 0);
    CHECK(run_cli("validate --perturb-gamma 1e-6").exit_code == 1);

    SUBCASE("below-only restricts the rows") {
        const auto res = run_cli("validate --below-only");
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("total_reflection") != std::string::npos);
        CHECK(res.out.find("unitarity") == std::string::npos);
        CHECK(res.out.find("density_peak") == std::string::npos);
    }
}

TEST_CASE("output formats agree and runs are reproducible") {
    const auto csv = run_cli("coeffs --ratio 1.7 --delta 2");
    const auto json = run_cli("coeffs --ratio 1.7 --delta 2 --format json");
    CHECK(csv.exit_code == 0);
    CHECK(json.exit_code == 0);
    // same R in both encodings
    const double r_csv = std::stod(fields_of(lines_of(csv.out)[1])[1]);
    const auto pos = json.out.find("rows");
    REQUIRE(pos != std::string::npos);
    CHECK(json.out.find(fields_of(lines_of(csv.out)[1])[1], pos) !=
          std::string::npos);
    CHECK(r_csv > 0.0);
    CHECK(r_csv < 1.0);

    const auto rerun = run_cli("coeffs --ratio 1.7 --delta 2");
    CHECK(rerun.out == csv.out);

    SUBCASE("file output matches the stream output") {
        const auto path =
            (std::filesystem::temp_directory_path() / "wave_out_check.csv")
                .string();
        const auto direct = run_cli("wave --delta 1 --ratio 0.5 --samples 11");
        const auto to_file = run_cli(
            "wave --delta 1 --ratio 0.5 --samples 11 --output " + path);
        CHECK(to_file.exit_code == 0);
        CHECK(to_file.out.empty());
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(buf.str() == direct.out);
        std::filesystem::remove(path);
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("coeffs --no-such-flag").exit_code == 2);
    CHECK(run_cli("coeffs --v0 -3").exit_code == 2);
    CHECK(run_cli("wave --figure 7").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("wave --help").exit_code == 0);
}
