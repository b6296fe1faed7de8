#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "eden/harness.hpp"
#include "eden/report.hpp"

using namespace eden;

namespace {

const char* cli_path() { return std::getenv("EDEN_CLI"); }

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult result;
    std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("eden_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        auto p = path / name;
        std::ofstream f(p);
        f << content;
        return p.string();
    }
    std::string join(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("cli end-to-end: exit codes and canonical output" * doctest::skip(cli_path() == nullptr)) {
    TempDir dir;
    RunResult setup =
        run("examples weiss_tau --write-dir " + dir.path.string() + " --format canonical");
    CHECK(setup.status == 0);
    run("examples golden_mean --write-dir " + dir.path.string());
    run("examples identity --write-dir " + dir.path.string());

    SUBCASE("decide succeeds with status 0 and matching verdicts") {
        RunResult r = run("decide " + dir.join("weiss.sft") + " " + dir.join("weiss_tau.sbc") +
                          " --format canonical");
        CHECK(r.status == 0);
        Report rep = Report::parse_canonical(r.out);
        CHECK(rep.get("injective") == "true");
        CHECK(rep.get("surjective") == "false");
        CHECK(rep.get("witness.non_surjective") == "0.1.2");
        CHECK(rep.get("status") == "0");
    }

    SUBCASE("usage and parse errors exit with status 1") {
        CHECK(run("analyze " + dir.join("missing.sft")).status == 1);
        CHECK(run("frobnicate x").status == 1);
        std::string bad = dir.file("bad.sft", "alphabet 0 0\nstep 0\nallowed 0\n");
        CHECK(run("analyze " + bad).status == 1);
    }

    SUBCASE("invalid endomorphisms exit with status 2") {
        std::string bad_code = dir.file("ones.sbc", "memory 0\nanticipation 0\nrule 0 1\nrule 1 1\n");
        RunResult r = run("decide " + dir.join("golden_mean.sft") + " " + bad_code +
                          " --format canonical");
        CHECK(r.status == 2);
        Report rep = Report::parse_canonical(r.out);
        CHECK(rep.get("endomorphism") == "false");
        CHECK(rep.get("endomorphism.violating_word") == "0.0");
    }

    SUBCASE("canonical output is byte-identical across runs and worker counts") {
        std::string cmd = "analyze " + dir.join("golden_mean.sft") + " --format canonical";
        CHECK(run(cmd).out == run(cmd).out);

        run("examples golden_mean_pair --write-dir " + dir.path.string());
        std::string scan = "scan " + dir.join("golden_mean_pair.sft") +
                           " --max-memory 1 --max-anticipation 1 --max-window 2 --format canonical";
        RunResult w1 = run(scan + " --workers 1");
        RunResult w4 = run(scan + " --workers 4");
        CHECK(w1.status == 0);
        CHECK(w1.out == w4.out);
    }

    SUBCASE("analyze reports the expected golden mean facts") {
        RunResult r = run("analyze " + dir.join("golden_mean.sft") + " --format canonical");
        CHECK(r.status == 0);
        Report rep = Report::parse_canonical(r.out);
        CHECK(rep.get("irreducible") == "true");
        CHECK(rep.get("mixing") == "true");
        CHECK(rep.get("mixing_gap") == "2");
        CHECK(rep.get("periodic.02") == "3");
        CHECK(rep.get("entropy").substr(0, 12) == "0.4812118250");
    }

    SUBCASE("scan exits 0 with zero violations") {
        RunResult r = run("scan " + dir.join("golden_mean.sft") +
                          " --max-memory 1 --max-anticipation 1 --format canonical");
        CHECK(r.status == 0);
        Report rep = Report::parse_canonical(r.out);
        CHECK(rep.get("scan.violations") == "0");
        CHECK(rep.get("scan.surjective") == rep.get("scan.pre_injective"));
    }

    SUBCASE("trace shadows a pseudo-orbit from a file") {
        std::string orbit = dir.file("orbit.po",
                                     "delta 2^-3\n"
                                     "left=0 bridge= right=0 offset=0\n"
                                     "left=0 bridge= right=0 offset=0\n"
                                     "left=0 bridge=1 right=0 offset=5\n");
        RunResult r = run("trace " + dir.join("golden_mean.sft") + " " + orbit +
                          " --epsilon 2^-2 --format canonical");
        CHECK(r.status == 0);
        Report rep = Report::parse_canonical(r.out);
        CHECK(rep.get("trace.ok") == "true");
        CHECK(rep.get("trace.entries") == "3");

        std::string coarse = dir.file("coarse.po",
                                      "delta 2^-1\n"
                                      "left=0 bridge= right=0 offset=0\n"
                                      "left=0 bridge= right=0 offset=0\n");
        RunResult bad = run("trace " + dir.join("golden_mean.sft") + " " + coarse +
                            " --epsilon 2^-2 --format canonical");
        CHECK(bad.status == 1);
        Report brep = Report::parse_canonical(bad.out);
        CHECK(brep.get("trace.ok") == "false");
        CHECK(brep.get("trace.achievable_epsilon") == "1");
    }

    SUBCASE("examples lists builtins and emits files") {
        RunResult r = run("examples --format canonical");
        CHECK(r.status == 0);
        Report rep = Report::parse_canonical(r.out);
        CHECK(rep.get("builtin.00.name") == "full2");
        CHECK(run("examples nonsense").status == 1);

        RunResult one = run("examples xor --format canonical");
        Report orep = Report::parse_canonical(one.out);
        CHECK(orep.get("example.expected.surjective") == "true");
        CHECK(orep.get("example.expected.injective") == "false");
    }
}

TEST_CASE("trace defect validation happens at parse time" * doctest::skip(cli_path() == nullptr)) {
    TempDir dir;
    run("examples golden_mean --write-dir " + dir.path.string());
    std::string orbit = dir.file("jump.po",
                                 "delta 2^-3\n"
                                 "left=0 bridge= right=0 offset=0\n"
                                 "left=1.0 bridge= right=1.0 offset=0\n");
    CHECK(run("trace " + dir.join("golden_mean.sft") + " " + orbit + " --epsilon 2^-2").status == 1);
}
