#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>

#include "clab/report.hpp"
#include "clab/verifier.hpp"

using namespace clab;

TEST_CASE("registry_census") {
    const auto& checks = list_checks();
    CHECK(checks.size() == 51);
    std::set<std::string> ids;
    std::map<std::string, int> kinds;
    for (const auto& c : checks) {
        ids.insert(c.id);
        ++kinds[c.kind];
        CHECK(!c.hypothesis.empty());
    }
    CHECK(ids.size() == 51);  // no duplicates
    CHECK(kinds["theorem"] == 13);
    CHECK(kinds["corollary"] == 6);
    CHECK(kinds["lemma"] == 9);
    CHECK(kinds["identity"] == 3);
    CHECK(kinds["conjecture"] == 20);
    CHECK(is_check_id("thm-2.1"));
    CHECK(is_check_id("conj-1458"));
    CHECK(!is_check_id("thm-9.9"));
    CHECK(!is_check_id(""));
}

TEST_CASE("invalid_arguments_are_rejected") {
    CHECK_THROWS_AS(run_check("thm-9.9", 7, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_check("thm-2.1", 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_check("thm-2.1", 9, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_check("thm-2.1", 3, 0), std::invalid_argument);
}

TEST_CASE("pass_rows_carry_witnesses") {
    auto r = run_check("thm-4.2", 7, 0);
    CHECK(r.check == "thm-4.2");
    CHECK(r.p == 7);
    CHECK(r.status == Status::pass);
    CHECK(r.clause == "rep-square");
    CHECK(r.witness.at("L") == "1");
    auto s = run_check("cor-3.3", 7, 0);
    CHECK(s.status == Status::pass);
    CHECK(s.witness.at("S") == "1");
    CHECK(s.witness.at("L") == "1");
    auto t = run_check("thm-4.4", 31, 0);
    CHECK(t.status == Status::pass);
    CHECK(t.witness.at("u") == "5");
    CHECK(t.witness.at("v") == "3");
}

TEST_CASE("skipped_rows_name_the_hypothesis") {
    auto r = run_check("thm-4.4", 11, 0);
    CHECK(r.status == Status::skipped);
    CHECK(r.clause == "hypothesis not met: p != 11");
    auto s = run_check("thm-4.5", 13, 0);  // 13 % 8 = 5
    CHECK(s.status == Status::skipped);
    CHECK(s.clause == "hypothesis not met: p % 8 in {1,7}");
    auto t = run_check("cor-3.2", 7, 0);
    CHECK(t.status == Status::skipped);
    CHECK(t.clause == "hypothesis not met: p >= 17");
}

TEST_CASE("no_row_is_vacuous") {
    for (const auto& c : list_checks())
        for (u64 p : {u64(5), u64(7), u64(11), u64(13), u64(31), u64(97)}) {
            auto r = run_check(c.id, p, 1);
            CHECK(!r.clause.empty());
            CHECK((r.ambiguity == "all-choices" || r.ambiguity == "some-choices" ||
                   r.ambiguity == "n/a"));
        }
}

TEST_CASE("conjecture_rows_map_to_their_own_statuses") {
    auto r = run_check("conj-4.3", 7, 0);
    CHECK(r.status == Status::conj_holds);
    for (u64 p : {u64(7), u64(13), u64(29), u64(53)}) {
        for (const char* id : {"conj-4.1", "conj-A46", "conj-1458"}) {
            auto row = run_check(id, p, 0);
            CHECK((row.status == Status::conj_holds || row.status == Status::skipped));
        }
    }
}

TEST_CASE("root_choice_ambiguity_policy") {
    // both square roots verified
    auto r = run_check("thm-4.3", 11, 0);
    CHECK(r.status == Status::pass);
    CHECK(r.ambiguity == "all-choices");
    CHECK(r.witness.at("c") == "-3");
    // an existential statement: some sign choice works
    auto s = run_check("cor-4.1", 11, 0);
    CHECK(s.status == Status::pass);
    CHECK(s.ambiguity == "some-choices");
    // no root enters the statement
    auto t = run_check("conj-4.1", 13, 0);
    CHECK(t.ambiguity == "n/a");
    // the vanishing branch has no root to choose
    auto u = run_check("thm-4.3", 7, 0);  // 7 % 8 = 7
    CHECK(u.status == Status::pass);
    CHECK(u.clause == "vanishes-mod-p2");
    CHECK(u.ambiguity == "n/a");
}

TEST_CASE("determinism_of_single_checks") {
    for (const char* id : {"thm-2.1", "thm-3.1", "lem-4.1", "eq-3.3"}) {
        auto a = run_check(id, 101, 42);
        auto b = run_check(id, 101, 42);
        CHECK(a.status == b.status);
        CHECK(a.clause == b.clause);
        CHECK(a.witness.dump() == b.witness.dump());
    }
}

TEST_CASE("sweep_shape_and_order") {
    SweepOptions opt;
    opt.lo = 5;
    opt.hi = 150;
    opt.ids = {"thm-3.1"};
    auto rep = sweep(opt);
    CHECK(rep.rows.size() == 33);  // primes in [5,150]
    for (const auto& r : rep.rows) {
        CHECK(r.check == "thm-3.1");
        CHECK(r.status == Status::pass);
    }
    for (size_t i = 1; i < rep.rows.size(); ++i) CHECK(rep.rows[i - 1].p < rep.rows[i].p);
}

TEST_CASE("sweep_lo_is_clamped_to_five") {
    SweepOptions opt;
    opt.lo = 2;
    opt.hi = 30;
    opt.ids = {"thm-4.2"};
    auto rep = sweep(opt);
    REQUIRE(!rep.rows.empty());
    CHECK(rep.rows.front().p == 5);
}

TEST_CASE("sweeps_are_deterministic_across_worker_counts") {
    SweepOptions a;
    a.lo = 5;
    a.hi = 400;
    a.workers = 1;
    a.ids = {"thm-4.1", "cor-4.2", "conj-4.10", "lem-4.6"};
    SweepOptions b = a;
    b.workers = 4;
    auto ra = sweep(a), rb = sweep(b);
    CHECK(emit_json(ra) == emit_json(rb));
}

TEST_CASE("mixed_kind_sweep_has_clean_tallies") {
    SweepOptions opt;
    opt.lo = 5;
    opt.hi = 250;
    auto rep = sweep(opt);
    CHECK(rep.rows.size() == 51 * 51);  // 51 primes in [5,250]
    size_t fails = 0, conj_fails = 0;
    for (const auto& r : rep.rows) {
        fails += r.status == Status::fail;
        conj_fails += r.status == Status::conj_fails;
        if (r.status == Status::skipped)
            CHECK(r.clause.rfind("hypothesis not met: ", 0) == 0);
    }
    CHECK(fails == 0);
    CHECK(conj_fails == 0);
}
