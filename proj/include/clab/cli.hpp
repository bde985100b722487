#pragma once

namespace clab {

// Full command-line surface; returns the process exit code.
// 0: all PASS / CONJ-HOLDS; 1: any FAIL; 2: any CONJ-FAILS; 64: usage error.
int parse_and_run(int argc, char** argv);

}  // namespace clab
