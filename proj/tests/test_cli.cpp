#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// run the installed binary (path provided by the build via CLAB_BIN)
RunResult run(const std::string& args, bool merge_stderr = false) {
    const char* bin = std::getenv("CLAB_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int st = pclose(pipe);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST_CASE("eval_subcommands_print_plain_values") {
    auto a = run("eval sum-central -m 8 -p 11 -e 1");
    CHECK(a.code == 0);
    CHECK(a.out == "3\n");
    auto b = run("eval sum-central -m -192 -p 5 -e 2");
    CHECK(b.code == 0);
    CHECK(b.out == "0\n");
    auto c = run("eval jacobi-j -t 0 -p 13");
    CHECK(c.code == 0);
    CHECK(c.out == "8\n");
    auto d = run("eval legendre-poly -n 2 -t 3 -p 7");
    CHECK(d.code == 0);
    CHECK(d.out == "6\n");
    auto e = run("eval sum-pair -x 2 -p 13 -e 1");
    CHECK(e.code == 0);
    CHECK(e.out == "9\n");
    auto f = run("eval sum-pair -x 2 -p 13 -e 1 --klim 1");
    CHECK(f.code == 0);
    CHECK(f.out == "0\n");  // 1 + C(2,1) C(3,1) 2 = 13
}

TEST_CASE("represent_prints_pairs_or_none") {
    auto a = run("represent --form 1,15 --scale p -p 31");
    CHECK(a.code == 0);
    CHECK(a.out == "(4,1)\n");
    auto b = run("represent --form 1,11 --scale 4p -p 31");
    CHECK(b.code == 0);
    CHECK(b.out == "(5,3)\n");
    auto c = run("represent --form 1,27 --scale 4p -p 11");  // 11 = 2 mod 3
    CHECK(c.code == 0);
    CHECK(c.out == "none\n");
}

TEST_CASE("list_enumerates_the_whole_registry") {
    auto r = run("list");
    CHECK(r.code == 0);
    CHECK(r.out.find("thm-2.1") != std::string::npos);
    CHECK(r.out.find("conj-1458") != std::string::npos);
    CHECK(r.out.find("theorem") != std::string::npos);
    CHECK(r.out.find("conjecture") != std::string::npos);
    size_t lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 51);
}

TEST_CASE("check_emits_report_rows") {
    auto r = run("check --id thm-3.1 --primes 5..60 --format json");
    CHECK(r.code == 0);
    auto arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 15);
    for (const auto& row : arr) {
        CHECK(row["check"] == "thm-3.1");
        CHECK(row["status"] == "PASS");
    }
    // a window with no primes is a clean empty report, not a usage error
    auto empty = run("check --id thm-2.1 --primes 9..9 --format json");
    CHECK(empty.code == 0);
    CHECK(empty.out == "[]\n");
}

TEST_CASE("sweep_csv_has_header_and_sorted_rows") {
    auto r = run("sweep --ids lem-4.2,cor-3.3 --primes 5..50 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("check,p,status,ambiguity,clause,witness_json\n", 0) == 0);
    // cor-3.3 sorts before lem-4.2
    size_t first_cor = r.out.find("\ncor-3.3,");
    size_t first_lem = r.out.find("\nlem-4.2,");
    REQUIRE(first_cor != std::string::npos);
    REQUIRE(first_lem != std::string::npos);
    CHECK(first_cor < first_lem);
}

TEST_CASE("scan_conjectures_covers_only_conjectures") {
    auto r = run("scan-conjectures --primes 5..30 --format json");
    CHECK(r.code == 0);
    auto arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() > 0);
    for (const auto& row : arr) {
        std::string id = row["check"];
        CHECK(id.rfind("conj-", 0) == 0);
        std::string st = row["status"];
        CHECK((st == "CONJ-HOLDS" || st == "SKIPPED"));
    }
}

TEST_CASE("usage_errors_exit_64") {
    CHECK(run("check --id thm-9.9 --primes 5..10").code == 64);
    CHECK(run("check --id thm-2.1 --primes banana").code == 64);
    CHECK(run("--definitely-not-a-flag").code == 64);
    CHECK(run("eval sum-central -m 5 -p 15 -e 1").code == 64);  // composite modulus
    CHECK(run("sweep --format yaml --primes 5..10").code == 64);
}

TEST_CASE("selftest_subcommand_smoke") {
    auto r = run("selftest --max-prime 60 --rep-max-prime 200", true);
    CHECK(r.code == 0);
    CHECK(r.out.find("ok") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("json_sweeps_are_byte_identical_across_runs") {
    std::string args = "sweep --ids thm-4.1,conj-4.10 --primes 5..200 --format json --seed 7";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.size() > 100);
}
