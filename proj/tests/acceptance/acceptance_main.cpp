// Acceptance suite: runs every criterion of the identity pipeline and prints
// one pass/fail line per criterion.  All comparisons are exact rational or
// integer equalities; there are no tolerances anywhere.  Exits nonzero if
// any criterion fails.

#include <cstdio>

#include "wbu3/verify.hpp"

int main() {
    wbu3::VerificationReport report = wbu3::run_verification(12);
    for (const auto& c : report.criteria) {
        std::printf("[%s] criterion %d: %s (%ld cases)", c.pass ? "PASS" : "FAIL",
                    c.number, c.name.c_str(), c.cases_checked);
        if (!c.detail.empty())
            std::printf(" -- %s", c.detail.c_str());
        std::printf("\n");
    }
    if (!report.all_pass) {
        std::printf("acceptance: FAILED\n");
        return 1;
    }
    std::printf("acceptance: all %zu criteria passed\n", report.criteria.size());
    return 0;
}
