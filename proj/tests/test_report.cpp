#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include "clab/report.hpp"

using namespace clab;

namespace {

CheckResult row(const char* check, u64 p, Status st) {
    CheckResult r;
    r.check = check;
    r.p = p;
    r.status = st;
    r.clause = "spot";
    return r;
}

}  // namespace

TEST_CASE("empty_report_serializations") {
    SweepReport rep;
    CHECK(emit_json(rep) == "[]\n");
    CHECK(emit_csv(rep) == "check,p,status,ambiguity,clause,witness_json\n");
}

TEST_CASE("json_rows_use_decimal_strings_and_fixed_key_order") {
    SweepReport rep;
    rep.rows.push_back(row("thm-4.2", 1099511627689, Status::pass));
    rep.rows[0].witness = {{"L", "42"}};
    std::string body = emit_json(rep);
    auto parsed = nlohmann::json::parse(body);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["p"] == "1099511627689");
    CHECK(parsed[0]["status"] == "PASS");
    CHECK(parsed[0]["witness"]["L"] == "42");
    // key order is part of the format
    std::vector<std::string> keys;
    auto ordered = nlohmann::ordered_json::parse(body);
    for (auto it = ordered[0].begin(); it != ordered[0].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"check", "p", "status", "ambiguity", "witness", "clause"});
}

TEST_CASE("rows_sort_by_check_then_prime") {
    SweepReport rep;
    rep.rows.push_back(row("thm-4.2", 11, Status::pass));
    rep.rows.push_back(row("cor-3.3", 13, Status::pass));
    rep.rows.push_back(row("thm-4.2", 5, Status::pass));
    rep.rows.push_back(row("cor-3.3", 5, Status::pass));
    sort_rows(rep);
    CHECK(rep.rows[0].check == "cor-3.3");
    CHECK(rep.rows[0].p == 5);
    CHECK(rep.rows[1].p == 13);
    CHECK(rep.rows[2].check == "thm-4.2");
    CHECK(rep.rows[2].p == 5);
    CHECK(rep.rows[3].p == 11);
}

TEST_CASE("csv_escaping") {
    CHECK(detail::csv_escape("plain") == "plain");
    CHECK(detail::csv_escape("a,b") == "\"a,b\"");
    CHECK(detail::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    SweepReport rep;
    rep.rows.push_back(row("lem-2.1", 7, Status::pass));
    rep.rows[0].witness = {{"note", "x,y"}};
    std::string csv = emit_csv(rep);
    CHECK(csv.find("\"{\"\"note\"\":\"\"x,y\"\"}\"") != std::string::npos);
}

TEST_CASE("status_labels") {
    CHECK(std::string(to_string(Status::pass)) == "PASS");
    CHECK(std::string(to_string(Status::fail)) == "FAIL");
    CHECK(std::string(to_string(Status::skipped)) == "SKIPPED");
    CHECK(std::string(to_string(Status::conj_holds)) == "CONJ-HOLDS");
    CHECK(std::string(to_string(Status::conj_fails)) == "CONJ-FAILS");
}

TEST_CASE("exit_code_policy") {
    SweepReport rep;
    CHECK(exit_code_for(rep) == 0);
    rep.rows.push_back(row("conj-4.1", 7, Status::conj_holds));
    rep.rows.push_back(row("thm-2.1", 7, Status::pass));
    rep.rows.push_back(row("thm-4.4", 11, Status::skipped));
    CHECK(exit_code_for(rep) == 0);
    rep.rows.push_back(row("conj-4.5", 13, Status::conj_fails));
    CHECK(exit_code_for(rep) == 2);
    rep.rows.push_back(row("thm-4.5", 17, Status::fail));
    CHECK(exit_code_for(rep) == 1);  // FAIL dominates CONJ-FAILS
}

TEST_CASE("text_summary_tallies_and_failure_lines") {
    SweepReport rep;
    rep.lo = 5;
    rep.hi = 100;
    rep.rows.push_back(row("thm-2.1", 7, Status::pass));
    rep.rows.push_back(row("conj-4.5", 13, Status::conj_fails));
    rep.rows[1].witness = {{"got", "3"}};
    std::string text = emit_text(rep);
    CHECK(text.find("PASS=1") != std::string::npos);
    CHECK(text.find("CONJ-FAILS=1") != std::string::npos);
    CHECK(text.find("CONJ-FAILS conj-4.5 p=13") != std::string::npos);
    CHECK(text.find("\"got\":\"3\"") != std::string::npos);
}
