#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "curlgraph/degseq.hpp"
#include "curlgraph/generators.hpp"

namespace {

std::string cli_path;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("invariants on an inline sequence") {
    const RunResult r = run("invariants --seq \"3 5 3 3 5 5 6\"");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["cn"] == 3);
    CHECK(j["ic"] == 2);
    CHECK(j["curling_index"] == 4);
    CHECK(j["compound_cn"] == 9);
    CHECK(!j["warnings"].empty()); // realizability is not checked
}

TEST_CASE("invariants on the one-vertex sequence") {
    const RunResult r = run("invariants --seq \"0\"");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["cn"] == 1);
    CHECK(j["ic"] == 1);
    CHECK(j["curling_index"] == 1);
    CHECK(j["compound_cn"] == 1);
}

TEST_CASE("invariants CSV output") {
    const RunResult r = run("--format csv invariants --seq \"1 2 2 1\"");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output ==
          "input,n,degree_string,cn,ic,curling_index,compound_cn\n"
          "1 2 2 1,4,(2)^2 (1)^2,2,2,4,4\n");
}

TEST_CASE("gen writes an edge list whose degrees match in-process") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "curlgraph_cli_test";
    fs::create_directories(dir);
    const fs::path file = dir / "jaco10.el";

    REQUIRE(run("gen jaco 10 --out " + file.string()).exit_code == 0);
    const RunResult r = run("invariants --file " + file.string());
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);

    using namespace curling;
    const auto d = group_degrees(jaco_degrees(10));
    CHECK(j["cn"] == cn_graph(d));
    CHECK(j["ic"] == ic_graph(d));
    CHECK(j["compound_cn"] == compound_cn(d));
    CHECK(j["n"] == 10);
    fs::remove_all(dir);
}

TEST_CASE("gen cycle 3 emits a triangle") {
    const RunResult r = run("gen cycle 3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "n 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("gen rejects bad families and parameters") {
    CHECK(run("gen moebius 5").exit_code != 0);
    CHECK(run("gen cycle 2").exit_code != 0);
    CHECK(run("gen rasta 5 5 2").exit_code != 0);
}

TEST_CASE("determinism: identical invocations, identical bytes") {
    const RunResult a = run("summand 30");
    const RunResult b = run("summand 30");
    CHECK(a.output == b.output);
    const RunResult c = run("gen setgraph 4");
    const RunResult d = run("gen setgraph 4");
    CHECK(c.output == d.output);
}

TEST_CASE("conjecture exit codes and trace") {
    RunResult r = run("conjecture --seq \"2 2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("appended: 2 3 1") != std::string::npos);
    CHECK(r.output.find("reached_one: true") != std::string::npos);

    r = run("--max-steps 1 conjecture --seq \"2 2\"");
    CHECK(r.exit_code == 2); // exhausted before reaching 1

    r = run("--max-steps 9 conjecture --seq \"1\" --stream");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("appended: 1 2 1 1 2 2 2 3 1") != std::string::npos);

    r = run("conjecture --family jaco --params 5 --arrangement descending");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("reached_one: true") != std::string::npos);
}

TEST_CASE("parse failures exit 1") {
    CHECK(run("invariants --seq \"1 x 2\"").exit_code == 1);
    CHECK(run("invariants --file /nonexistent/file").exit_code == 1);
}

TEST_CASE("jaco-table output and --check") {
    RunResult r = run("jaco-table 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("4 (1,2,2,1) 2 4 2") != std::string::npos);
    r = run("jaco-table 1");
    CHECK(r.output.find("1 (0) 1 1 1") != std::string::npos);
    CHECK(run("jaco-table 25 --check").exit_code == 0);
}

TEST_CASE("summand JSON shape") {
    const RunResult r = run("summand 12");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["n"] == 12);
    CHECK(j["chain"].size() == 2);
    CHECK(j["chain"][0] == nlohmann::json({7, 5}));
    CHECK(j["chain"][1] == nlohmann::json({5, 4, 3}));
    CHECK(j["l_star"] == 3);
    CHECK(run("summand 4").exit_code == 1);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-curlgraph-binary>\n");
        return 1;
    }
    cli_path = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
