#pragma once

#include <string>
#include <vector>

namespace cwilf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the built-in regression checks against the library's published
// values. The slow tier adds the 12!-scale brute-force confirmations.
std::vector<CheckResult> run_verification(bool slow, unsigned jobs);

}  // namespace cwilf
