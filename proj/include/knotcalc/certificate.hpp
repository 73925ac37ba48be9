#pragma once

#include <string>
#include <vector>

namespace knotcalc {

// One hypothesis of a certified deduction.  `verified` distinguishes facts
// the library checked computationally from facts asserted by the caller;
// asserted hypotheses are surfaced with an UNVERIFIED-HYPOTHESIS marker and
// never silently upgraded.
struct Hypothesis {
    std::string text;
    bool verified = false;
};

// A machine-checkable record of a single rule application: which rule fired,
// what it concluded, the classical result backing it, and the hypotheses the
// conclusion rests on.
struct Certificate {
    std::string rule_id;
    std::string statement;
    std::string citation;
    std::vector<Hypothesis> hypotheses;

    bool fully_verified() const {
        for (const auto& h : hypotheses)
            if (!h.verified) return false;
        return true;
    }
};

}  // namespace knotcalc
