#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ipda/automaton.hpp"
#include "ipda/builders.hpp"

using namespace ipda;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result sh(const std::string& args) {
    const std::string cmd = std::string(IPDA_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    Result r;
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;)
        r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / ("ipda_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("word") {
    CHECK(sh("word --kind level --level 2").out == "bwbwwbww\n");
    CHECK(sh("word --kind sector --level 2").out == "rssbwbwwbwwss\n");
    CHECK(sh("word --kind sector --root B --level 2").out == "rssbwbwwss\n");
    CHECK(sh("word --kind ball --sigma 2 --level 1").out == "bwwbww\n");
    CHECK(sh("word --system dodeca --kind level --level 1").out == "oooooccct\n");
    CHECK(sh("word --kind sector --level 0").code >= 3);
    CHECK(sh("word --system torus --level 1").code >= 3);
}

TEST_CASE("count") {
    const Result r = sh("count --level 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("total: 21") != std::string::npos);
    CHECK(sh("count --system cell120 --root 9 --level 1").out.find("total: 116") != std::string::npos);
}

TEST_CASE("build and run") {
    const auto dir = scratch_dir();
    const auto fib = dir / "fib.ipda";
    REQUIRE(sh("build --kind fibonacci --out " + fib.string()).code == 0);
    CHECK(parse_automaton(slurp(fib)) == fibonacci_automaton());

    CHECK(sh("run " + fib.string() + " --word aaa").code == 0);
    CHECK(sh("run " + fib.string() + " --word aaa").out == "Accepted\n");
    CHECK(sh("run " + fib.string() + " --word aaaa").code == 1);
    CHECK(sh("run " + fib.string() + " --word ba").code >= 3);
    CHECK(sh("run " + fib.string() + " --word aaaaa --max-configs 2").code == 2);

    const auto word = dir / "word.txt";
    std::ofstream(word) << "aaaaaaaa\n";
    CHECK(sh("run " + fib.string() + " --word-file " + word.string()).code == 0);
    CHECK(sh("run " + fib.string() + " < " + word.string()).code == 0);

    const Result traced = sh("run " + fib.string() + " --word aa --trace");
    CHECK(traced.out.find("(q0, 0 read, Z[e])") == 0);
    CHECK(traced.out.find("Accepted") != std::string::npos);

    const auto ball = dir / "ball.ipda";
    REQUIRE(sh("build --kind ball --out " + ball.string()).code == 0);
    const Automaton fixture = parse_automaton(slurp(std::filesystem::path(IPDA_TEST_DATA) / "ball_fib_W_5.ipda"));
    CHECK(parse_automaton(slurp(ball)).transitions().size() == fixture.transitions().size());

    CHECK(sh("build --kind ball --system torus").code >= 3);
    CHECK(sh("run " + (dir / "missing.ipda").string() + " --word a").code >= 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("check") {
    CHECK(sh("check --kind ball --levels 0..4 --mutations 20").code == 0);
    CHECK(sh("check --kind sector --levels 1..4 --mutations 10").code == 0);
    CHECK(sh("check --kind sector --variant as-printed --levels 1..2 --mutations 0").code == 1);
    const Result j = sh("check --kind ball --levels 1 --mutations 2 --json");
    CHECK(j.code == 0);
    CHECK(j.out.find("\"pass\": true") != std::string::npos);
    CHECK(sh("check --system cell120 --levels 1").code >= 3);
    CHECK(sh("check --levels 3..1").code >= 3);
}

TEST_CASE("usage errors") {
    CHECK(sh("").code >= 3);
    CHECK(sh("frobnicate").code >= 3);
    CHECK(sh("--help").code == 0);
}
