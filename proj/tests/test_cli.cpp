// End-to-end checks of the command-line binary: exit codes, CSV/JSON shape,
// and byte-stable artifacts. Invoked as: cli_tests <binary> <data-dir>.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string g_binary;
std::string g_data;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path tmp = fs::temp_directory_path() /
                         ("cli_out_" + std::to_string(::getpid()) + "_" +
                          std::to_string(counter++) + ".txt");
    const std::string cmd =
        '"' + g_binary + "\" " + args + " > \"" + tmp.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    fs::remove(tmp);
    return r;
}

std::string data(const std::string& name) { return '"' + g_data + "/" + name + '"'; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() /
                       ("cli_scratch_" + std::to_string(::getpid()) + "_" + tag);
    fs::remove_all(p);
    return p;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (const char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit with 64") {
    CHECK(run_cli("").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("eval --omega " + data("unit.json")).exit_code == 64);  // missing --xi
    CHECK(run_cli("zeros --omega /nonexistent.json").exit_code == 64);
    CHECK(run_cli("verify-spectrum --omega " + data("unit.json")).exit_code == 64);
    CHECK(run_cli("eval --omega " + data("unit.json") + " --xi 1 --func nope").exit_code ==
          64);
}

TEST_CASE("zeros emits one CSV row per certified zero") {
    const RunResult r =
        run_cli("zeros --omega " + data("unit.json") + " --radius 10.5 --tol 1e-10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("zero,certified_radius\n", 0) == 0);
    CHECK(count_lines(r.out) == 21);  // header + 20 zeros
}

TEST_CASE("eval prints transform values as CSV") {
    const RunResult r =
        run_cli("eval --omega " + data("unit.json") + " --xi 0.3 --xi 1 --func chi");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("xi,re,im,abs\n", 0) == 0);
    CHECK(r.out.find("0.8583936913341") != std::string::npos);
}

TEST_CASE("verify-spectrum passes the known pairs") {
    const RunResult unit = run_cli("verify-spectrum --omega " + data("unit.json") +
                                   " --lambda " + data("integers.json") +
                                   " --tiling-tol 1e-4 --grid-step 0.05");
    CHECK(unit.exit_code == 0);
    CHECK(unit.out.find("\"verdict\": \"pass\"") != std::string::npos);

    const RunResult two = run_cli("verify-spectrum --omega " + data("two.json") +
                                  " --lambda " + data("two_spectrum.json") +
                                  " --tiling-tol 1e-4 --grid-step 0.05");
    CHECK(two.exit_code == 0);
}

TEST_CASE("verify-spectrum rejects the shifted lattice with a witness") {
    const RunResult r = run_cli("verify-spectrum --omega " + data("unit.json") +
                                " --lambda " + data("bad03.json"));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"verdict\": \"fail\"") != std::string::npos);
    CHECK(r.out.find("difference") != std::string::npos);
}

TEST_CASE("finite windows come back inconclusive") {
    const RunResult r =
        run_cli("verify-spectrum --omega " + data("unit.json") +
                " --lambda-inline '{\"points\": [[0,1],[1,1],[2,1]]}'");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("completeness undecidable") != std::string::npos);
}

TEST_CASE("verify-tile artifacts are byte-identical across reruns") {
    const fs::path dir_a = scratch_dir("tile_a");
    const fs::path dir_b = scratch_dir("tile_b");
    const std::string base = "verify-tile --omega " + data("two.json") + " --lambda " +
                             data("two_spectrum.json") +
                             " --tol 1e-4 --grid-step 0.05 --format json,csv,svg --out ";
    const RunResult ra = run_cli(base + '"' + dir_a.string() + '"');
    const RunResult rb = run_cli(base + '"' + dir_b.string() + '"');
    CHECK(ra.exit_code == 0);
    CHECK(rb.exit_code == 0);
    for (const char* name : {"report.json", "samples.csv", "plot.svg"}) {
        const std::string a = slurp(dir_a / name);
        REQUIRE(!a.empty());
        CHECK(a == slurp(dir_b / name));
    }
    // report re-renders the same samples from the saved JSON.
    const fs::path dir_c = scratch_dir("tile_c");
    const RunResult rc = run_cli("report --in \"" + (dir_a / "report.json").string() +
                                 "\" --format csv,svg --out \"" + dir_c.string() + '"');
    CHECK(rc.exit_code == 0);
    CHECK(slurp(dir_c / "samples.csv") == slurp(dir_a / "samples.csv"));
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    fs::remove_all(dir_c);
}

TEST_CASE("indicator tiling distinguishes tilings from gaps") {
    CHECK(run_cli("verify-tile --indicator --omega " + data("two.json") + " --lambda " +
                  data("two_spectrum.json"))
              .exit_code == 0);
    CHECK(run_cli("verify-tile --indicator --omega " + data("unit.json") + " --lambda " +
                  data("even.json"))
              .exit_code == 1);
}

TEST_CASE("membership resolves rational queries exactly") {
    const std::string base = "membership --omega " + data("two.json") +
                             " --lambda-inline '{\"points\": [[0,1],[1,2]]}' --xi ";
    const RunResult in = run_cli(base + "5/2");
    CHECK(in.exit_code == 0);
    CHECK(in.out.find("\"path\": \"exact\"") != std::string::npos);
    CHECK(run_cli(base + "1/3").exit_code == 1);
}

TEST_CASE("membership falls back to the numeric phase test") {
    const std::string base =
        "membership --omega " + data("two.json") +
        " --lambda-inline '{\"points\": [\"0.0\", \"0.5\", \"2.0\", \"2.5\"]}' --xi ";
    const RunResult in = run_cli(base + "4.5");
    CHECK(in.exit_code == 0);
    CHECK(in.out.find("\"path\": \"numeric\"") != std::string::npos);
    CHECK(run_cli(base + "0.25").exit_code == 1);
}

TEST_CASE("generating-set reports the minimal window width") {
    const RunResult r =
        run_cli("generating-set --omega " + data("two.json") +
                " --lambda-inline '{\"points\": [\"0.0\", \"0.5\", \"2.0\", \"2.5\", "
                "\"4.0\", \"4.5\", \"6.0\", \"6.5\", \"8.0\", \"8.5\"]}'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"width\": \"2\"") != std::string::npos);
    CHECK(r.out.find("\"window_rank\": 2") != std::string::npos);
}

TEST_CASE("period detection and verification") {
    const std::string lambda =
        " --lambda-inline '{\"points\": [0, 0.5, 2, 2.5, 4, 4.5, 6, 6.5, 8, 8.5]}'";
    const RunResult detect = run_cli("period" + lambda + " --width 2");
    CHECK(detect.exit_code == 0);
    CHECK(detect.out.find("\"period\": \"2\"") != std::string::npos);
    CHECK(run_cli("period" + lambda + " --period 2").exit_code == 0);
    CHECK(run_cli("period" + lambda + " --period 0.7").exit_code == 1);
}

TEST_CASE("search recovers and labels verified spectra") {
    const RunResult unit = run_cli("search --omega " + data("unit.json") +
                                   " --max-period 2 --grid-step 0.05 --tiling-tol 1e-4");
    CHECK(unit.exit_code == 0);
    CHECK(unit.out.find("tiling-certified") != std::string::npos);
    CHECK(unit.out.find("\"budget_exhausted\": false") != std::string::npos);

    const RunResult starved =
        run_cli("search --omega " + data("two.json") + " --max-period 4 --budget 1");
    CHECK(starved.exit_code == 2);
    CHECK(starved.out.find("\"budget_exhausted\": true") != std::string::npos);
}

}  // TEST_SUITE

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: cli_tests <spectra-binary> <data-dir>\n");
        return 1;
    }
    g_binary = argv[1];
    g_data = argv[2];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
