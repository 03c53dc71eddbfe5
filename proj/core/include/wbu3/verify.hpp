#pragma once

#include <string>
#include <vector>

#include "wbu3/enumerate.hpp"

namespace wbu3 {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    long cases_checked = 0;
    std::string detail;  // first failure, with operand values
};

struct VerificationReport {
    std::vector<CriterionResult> criteria;
    bool all_pass = true;
};

/// Runs the whole identity suite: exact table reproduction, the colength
/// oracle equivalence, the contribution pair-sum identity, weighted-blow-up
/// closure, terminality criterion versus the Reid-Tai oracle, both bound
/// certificates, contribution periodicity, and the tower bounds.
/// r_max extends the certificate sweeps; it is clamped below at 12.
VerificationReport run_verification(Int r_max = 12);

} // namespace wbu3
