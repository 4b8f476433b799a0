// End-to-end contract tests for the command-line tool. Each check runs the
// real binary in a subshell and compares bytes, so this suite pins output
// format, exit codes, and determinism rather than math (the unit suites own
// that).
#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

#include "nlohmann/json.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string g_cli;
int g_failures = 0;

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + "'" + g_cli + "' " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        std::cerr << "popen failed for: " << cmd << "\n";
        return r;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL: " << what << "\n";
        ++g_failures;
    }
}

void expect_output(const std::string& args, const std::string& want,
                   const std::string& env_prefix = "") {
    const RunResult r = run(args, env_prefix);
    expect(r.code == 0, args + " should exit 0 (got " + std::to_string(r.code) + ")");
    expect(r.out == want, args + " bytes mismatch:\n  want: " + want + "  got:  " + r.out);
}

void expect_exit(const std::string& args, int code, const std::string& env_prefix = "") {
    const RunResult r = run(args, env_prefix);
    expect(r.code == code, args + " should exit " + std::to_string(code) + " (got " +
                               std::to_string(r.code) + ")");
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-binary>\n";
        return 2;
    }
    g_cli = argv[1];

    // --- eval: bare canonical values -------------------------------------
    expect_output("eval --family s2 --n 3 --k 2", "3\n");
    expect_output("eval --family s1 --n 3 --k 2", "-3\n");
    expect_output("eval --family bernoulli --n 4 --x 0", "-1/30\n");
    expect_output("eval --family deg-bernoulli --n 1 --x 0", "-1/2 + 1/2*l\n");
    expect_output("eval --family s2poly --n 2 --k 1", "2*x + 1\n");
    expect_output("eval --family s2lambda --n 2 --k 1 --x 0", "1 - l\n");
    expect_output("eval --family s2lambda --n 2 --k 1 --x 0 --unicode", "1 - λ\n");
    expect_output("eval --family whitney --n 2 --k 1 --m 2 --r 1", "4\n");
    expect_output("eval --family whitney-deg --n 2 --k 1 --m 2 --r 1", "4 - l\n");
    expect_output("eval --family euler-number --n 3", "1/4\n");
    expect_output("eval --family deg-euler --n 1 --order-r 1 --lambda 0", "x - 1/2\n");
    expect_output("eval --family s2lambda --n 2 --k 1 --x 1/2 --lambda 1/3", "5/3\n");

    // --- table: text and csv ---------------------------------------------
    {
        const RunResult r = run("table --family s2 --n-max 4");
        expect(r.code == 0, "table s2 exits 0");
        expect(contains(r.out, "4\t2\t7\n"), "table s2 holds row 4,2 -> 7");
        expect(contains(r.out, "0\t0\t1\n"), "table s2 holds row 0,0 -> 1");
    }
    {
        const RunResult r = run("table --family s2lambda --n-max 2 --x 0");
        expect(contains(r.out, "2\t1\t1 - l\n"), "table s2lambda row 2,1");
    }
    {
        const RunResult r = run("table --family whitney-deg --n-max 2 --m 2 --r 1");
        expect(contains(r.out, "2\t1\t4 - l\n"), "table whitney-deg row 2,1");
    }
    {
        const RunResult r = run("table --family s2 --n-max 3 --format csv");
        expect(r.out.rfind("n,k,value\n", 0) == 0, "csv starts with header");
        expect(contains(r.out, "3,2,3\n"), "csv row 3,2 -> 3");
    }
    {
        const RunResult r = run("table --family s2 --n-max 5 --k-max 2");
        expect(!contains(r.out, "\t3\t"), "k-max clips columns");
        expect(contains(r.out, "5\t2\t15\n"), "clipped table keeps row 5,2 -> 15");
    }

    // --- table: json round-trips through a strict parser ------------------
    {
        const RunResult r = run("table --family s2poly --n-max 3 --format json");
        expect(r.code == 0, "json table exits 0");
        const auto j = nlohmann::ordered_json::parse(r.out);
        expect(j["family"] == "s2poly", "json family field");
        expect(j["params"]["n_max"] == 3, "json n_max field");
        expect(j["rows"].size() == 10, "json row count for full triangle");
        expect(j["rows"][4]["value"] == "2*x + 1", "json row (2,1) value");
        expect(j.dump() + "\n" == r.out, "json output is the compact dump of itself");
    }
    {
        const RunResult r =
            run("table --family whitney --n-max 2 --m 2 --r 1 --format json");
        const auto j = nlohmann::ordered_json::parse(r.out);
        expect(j["params"]["m"] == 2 && j["params"]["r"] == 1, "json whitney params");
        expect(j.dump() + "\n" == r.out, "whitney json compact dump");
    }

    // --- determinism -------------------------------------------------------
    {
        const std::string args = "table --family s2lambda --n-max 6 --format json";
        expect(run(args).out == run(args).out, "json table is byte-deterministic");
    }
    {
        const std::string args = "verify --identity eq31";
        const RunResult serial = run(args);
        const RunResult sharded = run(args + " --jobs 3");
        expect(serial.code == 0 && sharded.code == 0, "verify eq31 passes");
        expect(serial.out == sharded.out, "worker count does not change verify output");
    }

    // --- verify ------------------------------------------------------------
    expect_output("verify --identity thm1 --n-max 0", "PASS 1 cells\n");
    expect_output("verify --identity thm3 --n-max 12", "PASS 78 cells\n");
    expect_output("verify --identity eq13", "PASS 13 cells\n");
    expect_output("verify --identity vandermonde --n-max 6", "PASS 7 cells\n");
    {
        const RunResult r = run("verify --identity thm5 --m 2 --r 1");
        expect(r.code == 0, "pinned-parameter verify passes");
        expect(r.out == "PASS 66 cells\n", "pinning m,r shrinks the grid to one combination");
    }

    // --- truncation-order environment knob ---------------------------------
    expect_output("verify --identity thm1", "PASS 15 cells\n", "DEGENSTIR_ORDER=4 ");
    expect_output("verify --identity thm1 --n-max 2", "PASS 6 cells\n",
                  "DEGENSTIR_ORDER=9 ");  // explicit flag wins over the environment
    expect_exit("verify --identity thm1", 2, "DEGENSTIR_ORDER=abc ");
    expect_exit("verify --identity thm1", 2, "DEGENSTIR_ORDER=40 ");
    expect_exit("verify --identity thm1", 2, "DEGENSTIR_ORDER=-1 ");

    // --- usage errors -------------------------------------------------------
    expect_exit("", 2);
    expect_exit("--help", 0);
    expect_exit("eval --family s2 --n 3", 2);            // triangle family needs --k
    expect_exit("eval --family nope --n 3 --k 1", 2);    // unknown family
    expect_exit("eval --family s2 --n -2 --k 1", 2);     // negative index
    expect_exit("table --family bernoulli --n-max 4", 2);  // sequences have no triangle
    expect_exit("verify --identity nope", 2);            // unknown identity tag
    expect_exit("eval --family s2 --n 3 --k 1 --x 1/x", 2);  // malformed rational
    expect_exit("table --family s2 --n-max 4 --format yaml", 2);
    expect_exit("eval --family whitney --n 2 --k 1 --m 0", 2);  // m must be positive
    expect_exit("verify --identity thm1 --n-max 40", 2);  // order cap

    if (g_failures == 0) {
        std::cout << "all cli contract checks passed\n";
        return 0;
    }
    std::cerr << g_failures << " cli contract check(s) failed\n";
    return 1;
}
