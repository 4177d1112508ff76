// Exercises the installed CLI surface end to end: commands, flags, output
// formats, exit codes (0 success, 2 input error, 3 mathematical failure).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

const std::string bin = QAOMOTO_BIN;
const std::string fixtures = FIXTURES_DIR;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                      "/qaomoto_cli_out.txt";
    std::string cmd = bin + " " + args + " > " + tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(tmp);
    r.out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return r;
}

}  // namespace

TEST_CASE("chambers command") {
    RunResult r = run("chambers " + fixtures + "/deleted_b3.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(1, 7, 12)") != std::string::npos);

    RunResult j = run("chambers " + fixtures + "/deleted_b3.json --json");
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["sizes"] == nlohmann::json({1, 7, 12}));
}

TEST_CASE("missing file exits with code 2") {
    RunResult r = run("chambers /nonexistent/nowhere.json");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("aomoto command on both published bases") {
    RunResult r1 = run("aomoto " + fixtures + "/three_lines.json --basis " + fixtures +
                       "/three_lines_basis_e.json");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("canonically q-deformable: NO") != std::string::npos);

    RunResult r2 = run("aomoto " + fixtures + "/three_lines.json --basis " + fixtures +
                       "/three_lines_basis_eta.json");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("canonically q-deformable: yes") != std::string::npos);

    RunResult r3 = run("aomoto " + fixtures + "/deleted_b3.json --field F3 --json");
    CHECK(r3.exit_code == 0);
    auto parsed = nlohmann::json::parse(r3.out);
    CHECK(parsed["field"] == "F3");
    CHECK(parsed["chain_ok"] == true);
}

TEST_CASE("specialize command reproduces the published dimensions") {
    std::string base = "specialize " + fixtures + "/deleted_b3.json --degrees " + fixtures +
                       "/deleted_b3_degrees.json";
    RunResult r1 = run(base + " --s0 \"zeta(4)\" --json");
    CHECK(r1.exit_code == 0);
    auto p1 = nlohmann::json::parse(r1.out);
    CHECK(p1["ranks"]["T"] == 4);
    CHECK(p1["dims"][1] == 2);

    RunResult r2 = run(base + " --s0 \"zeta(12)\" --json");
    CHECK(r2.exit_code == 0);
    auto p2 = nlohmann::json::parse(r2.out);
    CHECK(p2["ranks"]["T"] == 5);
    CHECK(p2["dims"][1] == 1);

    RunResult q = run(base + " --q0 \"zeta(6)\" --json");
    CHECK(q.exit_code == 0);
    auto pq = nlohmann::json::parse(q.out);
    CHECK(pq["dims"][1] == 1);

    RunResult z = run(base + " --s0 0");
    CHECK(z.exit_code == 2);
    CHECK(z.out.find("zero parameter") != std::string::npos);

    RunResult f = run(base + " --s0 0.7+0.2i --json");
    CHECK(f.exit_code == 0);
    auto pf = nlohmann::json::parse(f.out);
    CHECK(pf["carrier"] == "float");
}

TEST_CASE("inconsistent degree data exits with code 3") {
    // Corrupt one sign of the shipped degree fixture.
    std::ifstream in(fixtures + "/deleted_b3_degrees.json");
    nlohmann::json j;
    in >> j;
    int v = j["N"][0][0].get<int>();
    j["N"][0][0] = -v;
    std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                      "/qaomoto_bad_degrees.json";
    std::ofstream out(tmp);
    out << j.dump();
    out.close();

    RunResult r = run("qcomplex " + fixtures + "/deleted_b3.json --degrees " + tmp);
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("q-chain condition violated") != std::string::npos);
}

TEST_CASE("milnor and verify-fixtures commands") {
    RunResult m = run("milnor " + fixtures + "/deleted_b3.json --degrees " + fixtures +
                      "/deleted_b3_degrees.json --json");
    CHECK(m.exit_code == 0);
    auto parsed = nlohmann::json::parse(m.out);
    CHECK(parsed["rows"].size() == 7);

    RunResult v = run("verify-fixtures " + fixtures + "/deleted_b3.json --degrees " + fixtures +
                      "/deleted_b3_degrees.json");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("all checks passed") != std::string::npos);

    RunResult v2 = run("verify-fixtures " + fixtures + "/three_lines.json --degrees " + fixtures +
                       "/three_lines_degrees.json");
    CHECK(v2.exit_code == 0);

    RunResult m2 = run("specialize " + fixtures + "/three_lines.json --degrees " + fixtures +
                       "/three_lines_degrees.json --s0 \"zeta(6)\" --json");
    CHECK(m2.exit_code == 0);
    CHECK(nlohmann::json::parse(m2.out)["dims"][1] == 1);
}

TEST_CASE("weights override") {
    // All-ones weights at s0 = zeta(16) must match the first milnor row.
    std::string base = fixtures + "/deleted_b3.json --degrees " + fixtures +
                       "/deleted_b3_degrees.json";
    RunResult m = run("milnor " + base + " --json");
    REQUIRE(m.exit_code == 0);
    auto row0 = nlohmann::json::parse(m.out)["rows"][0];

    RunResult s = run("specialize " + base + " --weights 1,1,1,1,1,1,1 --s0 \"zeta(16)\" --json");
    REQUIRE(s.exit_code == 0);
    auto rep = nlohmann::json::parse(s.out);
    CHECK(rep["dims"] == row0["dims"]);
    CHECK(rep["ranks"] == row0["ranks"]);

    RunResult bad = run("specialize " + base + " --weights 1,2 --s0 \"zeta(4)\"");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("weight count mismatch") != std::string::npos);
}
