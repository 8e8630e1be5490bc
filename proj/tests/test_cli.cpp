// End-to-end checks of the command-line tool: golden outputs, exit
// codes, and byte-level determinism. The binary path comes from the
// build system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GWALK_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data_path(const std::string& name) {
    return std::string(GWALK_TEST_DATA) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("structure formula: text output") {
    const RunResult r = run_cli("structure formula --k 7 --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "^T S(U)^3 + J ^T S(U)^2 + ^T S(U) + S(U) + J S(U)^2 + S(U)^5\n");
}

TEST_CASE("structure formula: json output") {
    const RunResult r = run_cli("structure formula --k 3 --n 3 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["k"] == 3);
    CHECK(j["eps"]["-1"] == 1);
    CHECK(j["eps"]["3"] == 1);
    CHECK(j["tau"]["0"] == 0);
}

TEST_CASE("structure verify: exit codes honor the contract") {
    CHECK(run_cli("structure verify --in builtin:petersen --n 3").exit_code == 0);
    CHECK(run_cli("structure verify --in builtin:K4 --n 3").exit_code == 3);   // girth
    CHECK(run_cli("structure verify --in builtin:C5 --n 1").exit_code == 3);   // k = 2
    CHECK(run_cli("structure verify --in builtin:nope --n 1").exit_code == 3); // unknown name
    CHECK(run_cli("structure verify --n 1").exit_code == 2);                   // missing --in
    CHECK(run_cli("structure frobnicate").exit_code == 2);
    CHECK(run_cli("--bogus-flag").exit_code == 2);
    CHECK(run_cli("walk phases --k 2 --steps 4").exit_code == 3);   // k below 3
    CHECK(run_cli("walk phases --k 20 --steps 0").exit_code == 3);  // empty grid
}

TEST_CASE("walk phases: the k=20 figure rows") {
    const RunResult r = run_cli("walk phases --k 20 --steps 4 --format ascii");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "......o....#......\n"
          "....o...o#...#....\n"
          "..o...o#..o....#..\n"
          "o...o#..o#..oo...#\n");
}

TEST_CASE("walk phases: csv and pgm artifacts") {
    const RunResult csv = run_cli("walk phases --k 20 --steps 2 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("n,x,chirality,phase\n", 0) == 0);
    CHECK(csv.out.find("1,1,R,zero") != std::string::npos);

    const std::string tmp = "/tmp/gwalk_test_pattern.pgm";
    const RunResult pgm =
        run_cli("walk phases --k 20 --steps 3 --format pgm --out " + tmp);
    CHECK(pgm.exit_code == 0);
    const std::string bytes = read_file(tmp);
    CHECK(bytes.rfind("P5\n14 3\n255\n", 0) == 0);
    CHECK(bytes.size() == 12 + 42);
    std::remove(tmp.c_str());
}

TEST_CASE("graph info: builtin and file inputs across formats") {
    const RunResult json = run_cli("graph info --in builtin:petersen --format json");
    CHECK(json.exit_code == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["girth"] == 5);
    CHECK(j["regularity_k"] == 3);
    CHECK(j["diameter"] == 2);

    const RunResult adj = run_cli("graph info --in " + data_path("triangle.adj"));
    CHECK(adj.exit_code == 0);
    CHECK(adj.out.find("girth: 3") != std::string::npos);

    const RunResult g6 = run_cli("graph info --in " + data_path("k4.g6"));
    CHECK(g6.exit_code == 0);
    CHECK(g6.out.find("vertices: 4") != std::string::npos);
    CHECK(g6.out.find("edges: 6") != std::string::npos);

    const RunResult lcf = run_cli("graph info --in " + data_path("heawood.lcf"));
    CHECK(lcf.exit_code == 0);
    CHECK(lcf.out.find("girth: 6") != std::string::npos);

    CHECK(run_cli("graph info --in /nonexistent/file.adj").exit_code == 3);
}

TEST_CASE("zeta: byte-exact output and determinism") {
    const RunResult first = run_cli("zeta --in builtin:C3 --n 1");
    CHECK(first.exit_code == 0);
    CHECK(first.out == "{\"n\": 1, \"arcs\": 6, \"coefficients\": [1,0,0,-2,0,0,1]}\n");
    const RunResult second = run_cli("zeta --in builtin:C3 --n 1");
    CHECK(first.out == second.out);

    const RunResult petersen1 = run_cli("zeta --in builtin:petersen --n 3");
    const RunResult petersen2 = run_cli("zeta --in builtin:petersen --n 3");
    CHECK(petersen1.exit_code == 0);
    CHECK(petersen1.out == petersen2.out);
}

TEST_CASE("spectral appendix: golden k=12 n=3") {
    const RunResult r = run_cli("spectral appendix --k 12 --n 3");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["Q"]["mu_coefficients"] == nlohmann::json({0, -32, 0, 1}));
    CHECK(j["P"]["mu_coefficients"] == nlohmann::json({-10736, 0, 1600, 0, -68, 0, 1}));
    CHECK(j["Q"]["x_coefficient"] == -2);
    CHECK(j["P"]["y2_coefficient"] == 4);
}

TEST_CASE("spectral curves: csv schema and determinism") {
    const std::string args = "spectral curves --k 12 --n 2 --mu-min -12 --mu-max 12 --samples 25";
    const RunResult r = run_cli(args);
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("mu,x,y,branch\n", 0) == 0);
    CHECK(r.out.find("complex_pair") != std::string::npos);
    CHECK(r.out.find("real_pair") != std::string::npos);
    CHECK(run_cli(args).out == r.out);
}

TEST_CASE("spectral lift: pass, fail and refusal exits") {
    CHECK(run_cli("spectral lift --in builtin:petersen --n 3").exit_code == 0);
    CHECK(run_cli("spectral lift --in builtin:petersen --n 3 --tol 1e-60").exit_code == 1);
    CHECK(run_cli("spectral lift --in builtin:K4 --n 3").exit_code == 3);
    CHECK(run_cli("spectral lift --in builtin:C5 --n 1").exit_code == 3);
}

TEST_CASE("verify: report file plus status line") {
    const std::string tmp = "/tmp/gwalk_test_report.json";
    const RunResult r =
        run_cli("structure verify --in builtin:heawood --n 3 --report " + tmp);
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("pass", 0) == 0);
    const auto j = nlohmann::json::parse(read_file(tmp));
    CHECK(j["pass"] == true);
    CHECK(j["k"] == 3);
    CHECK(j["girth"] == 6);
    std::remove(tmp.c_str());
}
