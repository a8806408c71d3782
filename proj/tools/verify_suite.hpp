#pragma once

// Self-check suite behind `dqw verify`: block algebra, the exact step
// equations, confinement, the absorbing-wall constants, and the spectral
// equivalence, each with its tolerance pinned.

#include <string>
#include <vector>

namespace dqw::tools {

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<VerifyResult> run_verify_suite();

} // namespace dqw::tools
