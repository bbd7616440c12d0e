#pragma once

#include <functional>
#include <string>
#include <vector>

namespace quadric {

// One line of the verify-paper report. Every value the classification
// tables cite is recomputed and compared; understood discrepancies between
// the published text and the mechanical value are flagged, never failed.
enum class CheckStatus { Pass, Fail, Flagged };

struct CheckResult {
    std::string id;       // stable identifier, e.g. "s2.rank2-suite"
    int section;          // 1..5, matching the source's section numbering
    std::string ref;      // citation, e.g. "Lemma 4.5"
    std::string identity; // the identity or value checked
    CheckStatus status = CheckStatus::Pass;
    std::string detail;   // expected/actual or the erratum explanation
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
    int flagged = 0;

    bool ok() const { return failed == 0; }
};

// Runs the full identity suite; section = 0 runs everything.
VerifyReport run_verify(int section = 0);

const char* to_string(CheckStatus s);

} // namespace quadric
