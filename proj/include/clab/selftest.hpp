#pragma once

#include <string>
#include <vector>

#include "clab/modular.hpp"

namespace clab {

struct SelftestResult {
    bool ok = true;
    std::vector<std::string> lines;  // one entry per section
};

// Cross-validates independent implementation paths against each other and
// against exact arithmetic.  max_prime bounds the heaviest sections; the
// representation cross-check walks primes up to rep_max_prime.
SelftestResult run_selftest(u64 max_prime = 1000, u64 rep_max_prime = 10000);

}  // namespace clab
