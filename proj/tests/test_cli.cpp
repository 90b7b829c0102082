#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#ifndef HYPOTREE_CLI_PATH
#error "HYPOTREE_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(HYPOTREE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

RunResult run_env(const std::string& env, const std::string& args) {
    const std::string cmd =
        env + " " + std::string(HYPOTREE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n')
            ++n;
    return n;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line))
        out.push_back(line);
    return out;
}

std::string temp_file(const std::string& content) {
    static int counter = 0;
    const std::string path =
        "/tmp/hypotree_cli_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("construct emits edge lists, json, dot") {
    const RunResult star = run("construct star 5");
    CHECK(star.status == 0);
    CHECK(star.out == "0 1\n0 2\n0 3\n0 4\n");

    const RunResult js = run("construct star 5 --json");
    CHECK(js.status == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["n"] == 5);
    CHECK(j["edges"].size() == 4);
    CHECK(j["edges"][0][0] == 0);

    const RunResult dot = run("construct figure1 W --dot");
    CHECK(dot.status == 0);
    CHECK(dot.out.find("graph tree {") != std::string::npos);
    CHECK(count_lines(dot.out) == 8); // brace lines + 6 edges

    const RunResult one = run("construct star 1");
    CHECK(one.out == "n=1\n");

    CHECK(run("construct figure1 X9").status == 1);
    CHECK(run("construct figure1 X9").out.find("UnknownName") != std::string::npos);
    CHECK(run("construct bogus 3").status != 0);
    CHECK(run("construct dary 3 0").status != 0);
}

TEST_CASE("construct coalesce merges two tree files") {
    const std::string a = temp_file(run("construct star 4").out);
    const std::string b = temp_file(run("construct path 3").out);
    const RunResult r = run("construct coalesce " + a + " 1 " + b + " 0");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 5); // 6 vertices
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("energy text and json reports") {
    const std::string f = temp_file("0 1\n0 2\n0 3\n0 4\n");
    const RunResult txt = run("energy " + f);
    CHECK(txt.status == 0);
    const auto ls = lines(txt.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "energy 4.000000");
    CHECK(ls[1].rfind("error_bound ", 0) == 0);
    CHECK(ls[2] == "nullity 3");
    CHECK(ls[3] == "method exact_roots");

    const RunResult js = run("energy " + f + " --json");
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["n"] == 5);
    CHECK(j["energy"].get<double>() == doctest::Approx(4.0));
    const std::vector<std::string> coeffs = j["char_poly_coeffs"];
    CHECK(coeffs == std::vector<std::string>{"0", "0", "0", "-4", "0", "1"});

    const RunResult dense = run("energy " + f + " --method dense");
    CHECK(lines(dense.out)[3] == "method dense_eigensolver");
    CHECK(run("energy " + f + " --method wild").status != 0);

    // reading from stdin through the shell
    const RunResult piped = run("construct path 3 | " + std::string(HYPOTREE_CLI_PATH) +
                                " energy -");
    CHECK(lines(piped.out)[0] == "energy 2.828427");
    std::remove(f.c_str());
}

TEST_CASE("tolerance env var loosens the certificate") {
    const std::string f = temp_file("0 1\n0 2\n0 3\n0 4\n");
    const auto strict = nlohmann::json::parse(run_env("HYPOTREE_TOL=1e-12", "energy " + f + " --json").out);
    const auto loose = nlohmann::json::parse(run_env("HYPOTREE_TOL=1e-3", "energy " + f + " --json").out);
    const double es = strict["error_bound"].get<double>();
    const double el = loose["error_bound"].get<double>();
    CHECK(el > es);
    CHECK(std::abs(strict["energy"].get<double>() - 4.0) <= es);
    CHECK(std::abs(loose["energy"].get<double>() - 4.0) <= el);
    std::remove(f.c_str());
}

TEST_CASE("nullity subcommand") {
    const std::string f = temp_file("0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n0 7\n");
    const RunResult r = run("nullity " + f);
    CHECK(r.status == 0);
    CHECK(r.out == "6\n");
    std::remove(f.c_str());
}

TEST_CASE("classify exit codes express the verdict") {
    const RunResult yes = run("classify 7 3");
    CHECK(yes.status == 0);
    CHECK(yes.out.find("hypoenergetic: yes") != std::string::npos);

    const RunResult no = run("classify 8 3");
    CHECK(no.status == 2);
    CHECK(no.out.find("hypoenergetic: no") != std::string::npos);

    CHECK(run("classify 8 5 --strong").status == 2);
    CHECK(run("classify 9 4 --strong").status == 0);
    CHECK(run("classify 4 4").status == 2); // infeasible pair

    const auto j = nlohmann::json::parse(run("classify 9 4 --strong --json").out);
    CHECK(j["strong"] == true);
    CHECK(j["clause"].is_string());
}

TEST_CASE("witness prints a certified tree") {
    const RunResult r = run("witness 9 4 --strong");
    CHECK(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 10); // two header comments + 8 edges
    CHECK(ls[0] == "# witness n=9 delta=4 strong");
    CHECK(ls[1].rfind("# energy ", 0) == 0);
    CHECK(ls[1].find("margin") != std::string::npos);

    const RunResult no = run("witness 8 5 --strong");
    CHECK(no.status == 2);
    CHECK(no.out.rfind("no witness: ", 0) == 0);

    const RunResult dot = run("witness 6 5 --strong --dot");
    CHECK(dot.out.find("graph tree {") != std::string::npos);

    const auto j = nlohmann::json::parse(run("witness 12 5 --strong --json").out);
    CHECK(j["witness_edges"].size() == 11);
    CHECK(j["margin"].get<double>() > 0.0);
}

TEST_CASE("enumerate lists isomorphism classes") {
    const RunResult r7 = run("enumerate 7");
    CHECK(r7.status == 0);
    CHECK(count_lines(r7.out) == 11);

    const RunResult exact = run("enumerate 8 --delta-exact 5");
    CHECK(count_lines(exact.out) == 3);

    const RunResult w = run("enumerate 7 --delta-cap 3 --filter hypo");
    CHECK(count_lines(w.out) == 1);

    const RunResult one = run("enumerate 1");
    CHECK(one.out == "n=1\n");

    const RunResult codes = run("enumerate 7 --codes");
    const auto cs = lines(codes.out);
    CHECK(cs.size() == 11);
    for (size_t i = 1; i < cs.size(); ++i)
        CHECK(cs[i] != cs[0]);

    const RunResult guard = run("enumerate 21");
    CHECK(guard.status == 1);
    CHECK(guard.out.find("BudgetExceeded") != std::string::npos);

    const RunResult forced = run("enumerate 21 --max-n-override --delta-cap 2");
    CHECK(forced.status == 0);
    CHECK(count_lines(forced.out) == 1); // only the path survives the cap
}

TEST_CASE("reference energy verification report") {
    const RunResult r = run("verify-paper");
    CHECK(r.status == 1); // one cited value is misprinted at the source
    int pass = 0, fail = 0;
    std::string fail_line;
    for (const auto& line : lines(r.out)) {
        if (line.rfind("PASS ", 0) == 0)
            ++pass;
        if (line.rfind("FAIL ", 0) == 0) {
            ++fail;
            fail_line = line;
        }
    }
    CHECK(pass == 21);
    CHECK(fail == 1);
    CHECK(fail_line.find("trio(8,5)[0]") != std::string::npos);
    CHECK(r.out.find("some checks FAILED") != std::string::npos);
}

TEST_CASE("bad input surfaces as a parse error") {
    const std::string f = temp_file("0 1\n0 1\n2 9\n");
    const RunResult r = run("energy " + f);
    CHECK(r.status == 1);
    std::remove(f.c_str());
    CHECK(run("energy /nonexistent/file").status == 1);
    CHECK(run("energy /nonexistent/file").out.find("ParseError") != std::string::npos);
}
