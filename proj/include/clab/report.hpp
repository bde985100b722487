#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "clab/modular.hpp"

namespace clab {

enum class Status { pass, fail, skipped, conj_holds, conj_fails };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::skipped: return "SKIPPED";
        case Status::conj_holds: return "CONJ-HOLDS";
        case Status::conj_fails: return "CONJ-FAILS";
    }
    return "?";
}

// One (check, prime) verdict.  All numeric payloads inside witness are
// decimal strings so the report is the same on every platform.
struct CheckResult {
    std::string check;
    u64 p = 0;
    Status status = Status::skipped;
    std::string ambiguity = "n/a";
    std::string clause;
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();
};

struct SweepReport {
    u64 lo = 0;
    u64 hi = 0;
    std::vector<CheckResult> rows;
    double seconds = 0.0;  // not serialized
};

inline void sort_rows(SweepReport& rep) {
    std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.check != b.check) return a.check < b.check;
        return a.p < b.p;
    });
}

// report-v1: a JSON array of rows, keys in the order
// check, p, status, ambiguity, witness, clause; every number (p included)
// rendered as a decimal string.
inline std::string emit_json(const SweepReport& rep) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rep.rows) {
        nlohmann::ordered_json row;
        row["check"] = r.check;
        row["p"] = std::to_string(r.p);
        row["status"] = to_string(r.status);
        row["ambiguity"] = r.ambiguity;
        row["witness"] = r.witness;
        row["clause"] = r.clause;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline std::string emit_csv(const SweepReport& rep) {
    std::string out = "check,p,status,ambiguity,clause,witness_json\n";
    for (const auto& r : rep.rows) {
        out += detail::csv_escape(r.check);
        out += ',';
        out += std::to_string(r.p);
        out += ',';
        out += to_string(r.status);
        out += ',';
        out += detail::csv_escape(r.ambiguity);
        out += ',';
        out += detail::csv_escape(r.clause);
        out += ',';
        out += detail::csv_escape(r.witness.dump());
        out += '\n';
    }
    return out;
}

// Process exit code for a finished report: any FAIL wins over any
// CONJ-FAILS; a clean report exits 0.  (64 is reserved for usage errors
// and never produced here.)
inline int exit_code_for(const SweepReport& rep) {
    bool fails = false, conj_fails = false;
    for (const auto& r : rep.rows) {
        if (r.status == Status::fail) fails = true;
        if (r.status == Status::conj_fails) conj_fails = true;
    }
    if (fails) return 1;
    if (conj_fails) return 2;
    return 0;
}

inline std::string emit_text(const SweepReport& rep) {
    size_t tally[5] = {0, 0, 0, 0, 0};
    for (const auto& r : rep.rows) ++tally[size_t(r.status)];
    std::string out;
    out += "primes " + std::to_string(rep.lo) + ".." + std::to_string(rep.hi) + ", " +
           std::to_string(rep.rows.size()) + " rows\n";
    out += "PASS=" + std::to_string(tally[0]) + " FAIL=" + std::to_string(tally[1]) +
           " SKIPPED=" + std::to_string(tally[2]) + " CONJ-HOLDS=" + std::to_string(tally[3]) +
           " CONJ-FAILS=" + std::to_string(tally[4]) + "\n";
    for (const auto& r : rep.rows) {
        if (r.status == Status::fail || r.status == Status::conj_fails) {
            out += std::string(to_string(r.status)) + " " + r.check + " p=" + std::to_string(r.p) +
                   " [" + r.clause + "] witness=" + r.witness.dump() + "\n";
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", rep.seconds);
    out += "elapsed " + std::string(buf) + "s\n";
    return out;
}

}  // namespace clab
