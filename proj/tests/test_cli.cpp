#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

// Exercises the installed command-line surface end to end: exit codes,
// output formats, and byte determinism across thread counts.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    static int counter = 0;
    const std::string path = std::string(TORCRIT_BIN);
    const std::string out_file =
        "cli_out_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + ".txt";
    const std::string cmd = path + " " + args + " > " + out_file + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    std::remove(out_file.c_str());
    return r;
}

const std::string kFacts = std::string("--facts ") + TORCRIT_FACTS_FILE;

}  // namespace

TEST_CASE("check exits 0 on certified, 1 on not certified, 2 on bad input") {
    const auto ok = run("check --m 1 --n 55 --p 3 --degree 3 " + kFacts);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("CERTIFIED") != std::string::npos);

    // Empty registry: everything cited goes missing.
    const auto missing = run("check --m 1 --n 55 --p 3 --degree 3 --facts /dev/null");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("missing_fact") != std::string::npos);

    // The built-in registry is the default.
    CHECK(run("check --n 55 --p 3 --degree 3").exit_code == 0);

    // m must divide n.
    CHECK(run("check --m 2 --n 55 --p 3 --degree 3").exit_code == 2);
    // L must sit inside Q(zeta_m).
    CHECK(run("check --m 4 --n 16 --base 'zeta(3)' --p 5 --degree 2").exit_code == 2);
    // Exactly one of --degree / --field-K.
    CHECK(run("check --n 55 --p 3").exit_code == 2);
    CHECK(run("check --n 55 --p 3 --degree 3 --field-K 'zeta(5)'").exit_code == 2);
    // Unknown flags are errors.
    CHECK(run("check --n 55 --p 3 --degree 3 --frobnicate").exit_code == 2);
    // Unknown subcommand.
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("theorem mode via --field-K") {
    const auto r = run("check --n 21 --p 5 --field-K 13:5 " + kFacts);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("S = {1}") != std::string::npos);
}

TEST_CASE("named quotient from the registry") {
    const auto r = run("check --m 3 --n 27 --p 2 --degree 4 --quotient 'X1(27)' " + kFacts);
    CHECK(r.exit_code == 0);
}

TEST_CASE("splitting subcommand prints the decomposition") {
    const auto r = run("splitting --field 'zeta(13)' --p 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("e=1 f=3 g=4") != std::string::npos);

    const auto rel = run("splitting --field 'zeta(12)' --base 'zeta(3)' --p 7");
    CHECK(rel.exit_code == 0);
    CHECK(rel.output.find("e=1 f=2 count=1") != std::string::npos);

    CHECK(run("splitting --field 'zeta(13)' --p 6").exit_code == 2);
}

TEST_CASE("admissible subcommand lists no multiple of 35 over F_81") {
    const auto r = run("admissible --p 3 --k 4 --format records");
    CHECK(r.exit_code == 0);
    // Parse the orders array back and scan it.
    const auto pos = r.output.find("\"orders\":[");
    REQUIRE(pos != std::string::npos);
    std::istringstream nums(r.output.substr(pos + 10));
    long v = 0;
    char sep = 0;
    while (nums >> v) {
        CHECK(v % 35 != 0);
        nums >> sep;
        if (sep == ']') break;
    }
}

TEST_CASE("census subcommand with an order filter") {
    const auto r = run("census --p 2 --k 4 --order 25 --format records");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    int records = 0;
    while (std::getline(lines, line)) {
        if (line.find("\"record\":\"census\"") == std::string::npos) continue;
        ++records;
        CHECK(line.find("\"d1\":5") != std::string::npos);
        CHECK(line.find("\"d2\":5") != std::string::npos);
        CHECK(line.find("\"points\":25") != std::string::npos);
    }
    CHECK(records > 0);

    // Budget refusals are input errors.
    CHECK(run("census --p 2 --k 8 --census-budget 128").exit_code == 2);
}

TEST_CASE("record output is byte-identical across thread counts") {
    const auto one = run("--threads 1 --format records census --p 7 --k 2");
    const auto four = run("--threads 4 --format records census --p 7 --k 2");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.output == four.output);
    CHECK(one.output.find("\"record\":\"schema\"") != std::string::npos);

    const auto check1 = run("--threads 1 --format records check --n 55 --p 3 --degree 3");
    const auto check4 = run("--threads 4 --format records check --n 55 --p 3 --degree 3");
    CHECK(check1.output == check4.output);
    CHECK(check1.exit_code == 0);

    const auto rep1 = run("--threads 1 --format records reproduce-paper");
    const auto rep4 = run("--threads 4 --format records reproduce-paper");
    CHECK(rep1.output == rep4.output);
    CHECK(rep1.exit_code == 0);
}

TEST_CASE("cusp-fields table") {
    const auto r = run("cusp-fields --m 1 --n 55 --p 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("r=5") != std::string::npos);
    CHECK(r.output.find("Q(zeta11)") != std::string::npos);

    const auto rel = run("cusp-fields --m 3 --n 12 --p 7 --base 'zeta(3)'");
    CHECK(rel.exit_code == 0);
    CHECK(rel.output.find("g=") == std::string::npos);  // relative mode prints counts
}

TEST_CASE("reproduce-paper certifies the full catalog") {
    const auto r = run("reproduce-paper " + kFacts);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all certified") != std::string::npos);
    CHECK(r.output.find("OutOfScope") != std::string::npos);

    const auto empty = run("reproduce-paper --facts /dev/null");
    CHECK(empty.exit_code == 1);
    CHECK(empty.output.find("NOT CERTIFIED") != std::string::npos);
}
