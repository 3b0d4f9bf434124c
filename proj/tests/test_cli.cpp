#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct RunResult {
    int code = 0;
    std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = dicolor::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

/// Writes `text` to a fresh file under the system temp directory and
/// returns its path; files persist for the process lifetime only.
std::string temp_file(const std::string& stem, const std::string& text) {
    static int counter = 0;
    std::filesystem::path p = std::filesystem::temp_directory_path() /
                              (stem + "-" + std::to_string(counter++) + ".txt");
    std::ofstream f(p);
    f << text;
    return p.string();
}

std::string fano_file() {
    RunResult gen = run_cli({"gen", "fano"});
    REQUIRE(gen.code == 0);
    return temp_file("fano", gen.out);
}

}  // namespace

TEST_CASE("gen writes digraphs to stdout") {
    RunResult r = run_cli({"gen", "fano"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 4) == "7 21");

    RunResult cyc = run_cli({"gen", "cycle", "4"});
    CHECK(cyc.code == 0);
    CHECK(cyc.out.substr(0, 3) == "4 4");
}

TEST_CASE("stats reports the degree profile and bounds as key=value") {
    RunResult r = run_cli({"stats", fano_file()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "n=7\n"));
    CHECK(contains(r.out, "m=21\n"));
    CHECK(contains(r.out, "degree_geo_ceil=3\n"));
    CHECK(contains(r.out, "digon_free=true\n"));
    CHECK(contains(r.out, "eulerian=true\n"));
    CHECK(contains(r.out, "degree_bound=4\n"));
    CHECK(contains(r.out, "geo_ceiling_bound=3\n"));
    CHECK(contains(r.out, "shaved_applicable=false\n"));
}

TEST_CASE("stats --json emits a parseable document") {
    RunResult r = run_cli({"--json", "stats", fano_file()});
    CHECK(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "stats");
    CHECK(doc["n"] == 7);
    CHECK(doc["m"] == 21);
    CHECK(doc["digon_free"] == true);
}

TEST_CASE("chi solves and honors decision mode") {
    std::string fano = fano_file();
    RunResult r = run_cli({"chi", fano});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "chi=3\n"));
    CHECK(contains(r.out, "coloring="));

    CHECK(run_cli({"chi", fano, "--k", "3"}).code == 0);
    CHECK(run_cli({"chi", fano, "--k", "2"}).code == 1);
}

TEST_CASE("check verdicts carry a witness") {
    std::string c3 = temp_file("c3", run_cli({"gen", "cycle", "3"}).out);

    RunResult bad = run_cli({"check", c3, "--coloring",
                             temp_file("allzero", "0 0\n1 0\n2 0\n")});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "valid=false\n"));
    CHECK(contains(bad.out, "bad_color=0\n"));
    CHECK(contains(bad.out, "cycle="));

    RunResult good = run_cli({"check", c3, "--coloring",
                              temp_file("twocol", "0 0\n1 0\n2 1\n")});
    CHECK(good.code == 0);
    CHECK(contains(good.out, "valid=true\n"));
}

TEST_CASE("color --algo lll traces rounds on stderr and colors on stdout") {
    RunResult r = run_cli({"color", fano_file(), "--algo", "lll",
                           "--max-rounds", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.err, "round 1 failed=7 minX=0 meanX=0.0000\n"));
    CHECK(contains(r.err, "round 2 failed=7"));
    CHECK(contains(r.err, "outcome=fallback\n"));
    CHECK(contains(r.err, "reason=round-cap\n"));
    CHECK(contains(r.err, "valid=true\n"));
    // Seven "v c" lines on stdout.
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 7);
}

TEST_CASE("verify-claims is deterministic and confirms the catalogue") {
    RunResult a = run_cli({"verify-claims", "--samples", "5"});
    RunResult b = run_cli({"verify-claims", "--samples", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
    CHECK(contains(a.out, "claim=directed-cycles-need-two-colors status=confirmed"));
    CHECK(contains(a.out, "refuted=0"));
}

TEST_CASE("search-delta0 finds counterexamples below the ceiling") {
    RunResult r = run_cli({"search-delta0", "--target", "2", "--samples", "2"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "counterexample probe=shared-triangles"));
    CHECK(contains(r.out, "counterexamples=4"));
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run_cli({"nosuchcommand"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"gen", "nosuchshape"}).code == 2);
    CHECK(run_cli({"gen", "cycle"}).code == 2);           // missing size
    CHECK(run_cli({"obstruction", fano_file()}).code == 2);  // needs --k or --lists
    CHECK(run_cli({"chi", "/no/such/file.dg"}).code == 2);
    RunResult garbled = run_cli({"chi", temp_file("garbled", "2 1\n0 5\n")});
    CHECK(garbled.code == 2);
    CHECK(contains(garbled.err, "input error"));
}

TEST_CASE("guard violations exit 3") {
    // Exhaustive mode at an unsupported target is a usage error (2), while
    // blowing a node budget maps to the resource code (3).
    CHECK(run_cli({"search-delta0", "--mode", "exhaustive", "--target", "5"}).code == 2);
    std::string k5 = temp_file("k5", run_cli({"gen", "complete", "5"}).out);
    RunResult limited = run_cli({"--limits-nodes", "1", "chi", k5});
    CHECK(limited.code == 3);
}
