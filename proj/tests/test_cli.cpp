// End-to-end checks of the tdgen binary: exit codes, stdout output, and the
// TDGEN_OUT_DIR environment variable.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "tdgen/errors.hpp"

#ifndef TDGEN_BIN
#define TDGEN_BIN "./tdgen"
#endif

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
    const std::string cmd = std::string(TDGEN_BIN) + " " + args + " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path work_dir() {
    const fs::path dir = fs::temp_directory_path() / "tdgen_cli_test";
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
}

}  // namespace

TEST_CASE("cli: success paths exit 0") {
    const fs::path dir = work_dir();
    CHECK(run("circle --n 4 --out " + (dir / "c.txt").string()) == tdgen::kExitOk);
    CHECK(run("analyze --in " + (dir / "c.txt").string()) == tdgen::kExitOk);
    CHECK(run("plot --in " + (dir / "c.txt").string() + " --out " + (dir / "c.svg").string()) ==
          tdgen::kExitOk);
    CHECK(run("--version") == tdgen::kExitOk);
}

TEST_CASE("cli: parameter errors exit 2") {
    CHECK(run("circle --n 1") == tdgen::kExitInvalidParameter);
    CHECK(run("circle --sector-width 500") == tdgen::kExitInvalidParameter);
    CHECK(run("pseudo-random --n 10 --pc 1.5") == tdgen::kExitInvalidParameter);
    CHECK(run("pseudo-random --n 10 --borders sideways") == tdgen::kExitInvalidParameter);
    CHECK(run("circle --no-such-flag 3") == tdgen::kExitInvalidParameter);
    CHECK(run("random --n 5 --dim 4") == tdgen::kExitInvalidParameter);
}

TEST_CASE("cli: infeasible congestion exits 3") {
    CHECK(run("pseudo-random --n 10 --nc 30 --maxc 3") == tdgen::kExitInfeasible);
}

TEST_CASE("cli: malformed files exit 4") {
    const fs::path dir = work_dir();
    write_file(dir / "garbage.txt", "not an instance\n");
    CHECK(run("analyze --in " + (dir / "garbage.txt").string()) == tdgen::kExitMalformedFile);
    write_file(dir / "versioned.txt",
               "tdgen instance 9\ndimension: 2D\nn: 1\ndmin: 5\naircraft:\n0 0 0 0 400 0 0\n");
    CHECK(run("analyze --in " + (dir / "versioned.txt").string()) == tdgen::kExitMalformedFile);
    CHECK(run("analyze --in " + (dir / "does_not_exist.txt").string()) ==
          tdgen::kExitMalformedFile);
}

TEST_CASE("cli: validate distinguishes conflict-free from violated") {
    const fs::path dir = work_dir();
    const fs::path inst = dir / "head_on.txt";
    write_file(inst,
               "tdgen instance 1\ndimension: 2D\nn: 2\ndmin: 5\naircraft:\n"
               "0 0 0 0 480 0 0\n1 40 0 0 -480 0 0\n");
    const fs::path conflicted = dir / "identity.sol";
    write_file(conflicted, "tdgen solution 1\nn: 2\nvelocities:\n0 480 0 0\n1 -480 0 0\n");
    CHECK(run("validate --in " + inst.string() + " --solution " + conflicted.string()) ==
          tdgen::kExitConflictsFound);

    // 30-degree turn on aircraft 0 clears the conflict
    const fs::path fixed = dir / "turned.sol";
    write_file(fixed,
               "tdgen solution 1\nn: 2\nvelocities:\n"
               "0 415.69219381653056 240 0\n1 -480 0 0\n");
    CHECK(run("validate --in " + inst.string() + " --solution " + fixed.string()) ==
          tdgen::kExitOk);

    const fs::path short_sol = dir / "short.sol";
    write_file(short_sol, "tdgen solution 1\nn: 1\nvelocities:\n0 480 0 0\n");
    CHECK(run("validate --in " + inst.string() + " --solution " + short_sol.string()) ==
          tdgen::kExitMalformedFile);
}

TEST_CASE("cli: sweep writes the summary and log pair") {
    const fs::path dir = work_dir();
    const std::string prefix = (dir / "mini").string();
    CHECK(run("sweep --n 10 --den 0.1 --t 1 --widths 150 --seeds 1 --seed 5 --out " + prefix) ==
          tdgen::kExitOk);
    CHECK(fs::exists(prefix + "-summary.txt"));
    CHECK(fs::exists(prefix + "-log.txt"));
}

TEST_CASE("cli: TDGEN_OUT_DIR anchors relative outputs") {
    const fs::path dir = work_dir() / "outdir";
    fs::create_directories(dir);
    const std::string cmd = std::string("TDGEN_OUT_DIR=") + dir.string() + " " + TDGEN_BIN +
                            " circle --n 5 --out env_test.txt >/dev/null 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(dir / "env_test.txt"));
}

TEST_CASE("cli: instance text goes to stdout when --out is omitted") {
    const fs::path dir = work_dir();
    const fs::path captured = dir / "stdout.txt";
    const std::string cmd = std::string(TDGEN_BIN) + " circle --n 4 --seed 3 2>/dev/null > " +
                            captured.string();
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream f(captured);
    std::string first;
    std::getline(f, first);
    CHECK(first == "tdgen instance 1");
}
