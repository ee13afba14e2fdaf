#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fermat {

struct VerifyOptions {
    unsigned max_degree = 6;
    unsigned triangular_bound = 2;
    // Restrict grid-driven checks to these (n, m) shapes; empty = full default
    // grid. Checks whose fixed instances fall outside the grid are skipped.
    std::vector<std::pair<unsigned, std::vector<unsigned>>> grid;
};

struct VerifyResult {
    bool all_passed;
    unsigned passed = 0;
    unsigned failed = 0;
    unsigned skipped = 0;
};

// Replays every classification/kernel identity at desk scale, one PASS/FAIL
// line per check, in a fixed order with fixed seeds so identical invocations
// print identical reports.
VerifyResult run_verify_suite(const VerifyOptions& options, std::ostream& out);

}  // namespace fermat
