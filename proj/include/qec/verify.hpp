// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qec/decoder.hpp"

namespace qec {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

/// The oracle suite behind the `verify` command: structural decoder checks,
/// the exhaustive phi-consistency reconstruction, level-1 closed-form and
/// level-2/3 recursion equivalence for Z rotations, the four-frame twirl
/// average, and the dense brute-force cross-check. quick = true trims the
/// brute-force check to one random assignment.
std::vector<CheckResult> run_verification(const StabilizerCode& code, const DecoderTable& dec,
                                          bool quick = false);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qec
