#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clab/report.hpp"

namespace clab {

struct CheckInfo {
    std::string id;
    std::string kind;        // theorem | corollary | lemma | identity | conjecture
    std::string hypothesis;  // applicability condition; outside it the row is SKIPPED
};

// Registry in canonical order; ids are the stable external interface.
const std::vector<CheckInfo>& list_checks();
bool is_check_id(const std::string& id);

// Run one check at one prime.  Throws std::invalid_argument for an unknown id
// or a p that is not a prime >= 5; internal errors inside a check surface as a
// FAIL row with the error text in the witness.
CheckResult run_check(const std::string& id, u64 p, u64 seed);

struct SweepOptions {
    u64 lo = 5;
    u64 hi = 10000;
    u64 seed = 0xC0FFEE;
    int workers = 0;                // <= 0: CONGRUENCE_LAB_WORKERS env, else hardware
    std::vector<std::string> ids;   // empty: all registered checks
};

// All selected checks over all primes in [lo, hi], rows sorted by (check, p).
// Row content depends only on (check id, p, seed), never on scheduling.
SweepReport sweep(const SweepOptions& opt);

}  // namespace clab
