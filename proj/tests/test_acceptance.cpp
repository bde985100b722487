#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end gate: the full prime-range verification the library exists for.
// CLAB_ACCEPT_MAX shrinks the prime ceiling for quick local iteration; the
// shipped default is the full 10^4 range.

#include <chrono>
#include <cstdlib>
#include <string>

#include "clab/binomial.hpp"
#include "clab/exact.hpp"
#include "clab/modular.hpp"
#include "clab/report.hpp"
#include "clab/selftest.hpp"
#include "clab/verifier.hpp"

using namespace clab;

namespace {

u64 prime_ceiling() {
    if (const char* env = std::getenv("CLAB_ACCEPT_MAX")) {
        u64 v = std::strtoull(env, nullptr, 10);
        if (v >= 5) return v;
    }
    return 10000;
}

SweepReport full_sweep() {
    SweepOptions opt;
    opt.lo = 5;
    opt.hi = prime_ceiling();
    return sweep(opt);
}

}  // namespace

TEST_CASE("full_range_sweep_with_conjecture_scan_and_determinism") {
    auto rep = full_sweep();

    size_t theorem_rows = 0, conjecture_rows = 0;
    for (const auto& r : rep.rows) {
        bool conj = r.check.rfind("conj-", 0) == 0;
        (conj ? conjecture_rows : theorem_rows) += 1;

        // proved statements never fail; conjectures never falsify in range
        if (conj) {
            CHECK(r.status != Status::pass);
            CHECK(r.status != Status::fail);
            if (r.status == Status::conj_fails) {
                MESSAGE("counterexample: " << r.check << " p=" << r.p << " " << r.witness.dump());
                CHECK(r.status != Status::conj_fails);
            }
        } else {
            CHECK(r.status != Status::conj_holds);
            CHECK(r.status != Status::conj_fails);
            if (r.status == Status::fail) {
                MESSAGE("failure: " << r.check << " p=" << r.p << " " << r.witness.dump());
                CHECK(r.status != Status::fail);
            }
        }

        // skips are hypothesis-driven, never silent
        if (r.status == Status::skipped)
            CHECK(r.clause.rfind("hypothesis not met: ", 0) == 0);
        CHECK(!r.clause.empty());
    }
    CHECK(theorem_rows > 0);
    CHECK(conjecture_rows > 0);

    // same seed, second run: byte-identical serialized report
    auto rep2 = full_sweep();
    CHECK(emit_json(rep) == emit_json(rep2));

    // a falsified conjecture or failed theorem would flip the exit code
    CHECK(exit_code_for(rep) == 0);
    SweepReport doctored = rep;
    CheckResult bad;
    bad.check = "conj-4.5";
    bad.p = 13;
    bad.status = Status::conj_fails;
    doctored.rows.push_back(bad);
    CHECK(exit_code_for(doctored) == 2);
    bad.check = "thm-4.5";
    bad.status = Status::fail;
    doctored.rows.push_back(bad);
    CHECK(exit_code_for(doctored) == 1);
}

TEST_CASE("exact_convolution_oracle_at_full_depth") {
    auto start = std::chrono::steady_clock::now();

    auto left = lemma21_values(Side::left, 300);
    auto right = lemma21_values(Side::right, 300);
    REQUIRE(left.size() == 301);
    for (i64 m = 0; m <= 300; ++m) CHECK(left[m] == right[m]);

    CHECK(check_recurrence_all(Side::left, 300));
    CHECK(check_recurrence_all(Side::right, 300));

    for (Side s : {Side::left, Side::right})
        for (i64 m = 0; m <= 100; ++m) {
            WzReport rep = check_wz_certificate(s, m);
            CHECK(rep.ok);
            CHECK(rep.poles == 3);
            CHECK(rep.checked == int(m));
        }

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 60.0);
}

TEST_CASE("documented_numeric_anchors") {
    // sum = 1 with 4p = L^2 + 27 M^2, L = 1 mod 3
    auto a = run_check("cor-3.3", 7, 0);
    CHECK(a.status == Status::pass);
    CHECK(a.witness.at("S") == "1");
    CHECK(a.witness.at("L") == "1");

    // sum = 3 = 4c^2 mod 11 with 11 = c^2 + 2d^2, c = 1 mod 4
    CHECK(sum_central(8, Modulus(11, 1)) == 3);
    auto b = run_check("thm-4.3", 11, 0);
    CHECK(b.status == Status::pass);
    CHECK(b.witness.at("c") == "-3");
    CHECK(reduce(4 * (-3) * (-3), 11) == 3);

    // sum = 25 = u^2 mod 31 with 4*31 = u^2 + 11 v^2
    CHECK(sum_central(64, Modulus(31, 1)) == 25);
    auto c = run_check("thm-4.4", 31, 0);
    CHECK(c.status == Status::pass);
    CHECK(c.witness.at("u") == "5");

    // the 2 mod 3 branch vanishes to the second power
    CHECK(sum_central(-192, Modulus(5, 2)) == 0);
    auto d = run_check("thm-4.2", 5, 0);
    CHECK(d.status == Status::pass);
    CHECK(d.clause == "vanishes-mod-p2");
}

TEST_CASE("property_suites_pass") {
    auto res = run_selftest(1000, prime_ceiling());
    for (const auto& line : res.lines) MESSAGE(line);
    CHECK(res.ok);
}
