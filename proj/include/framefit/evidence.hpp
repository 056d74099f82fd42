#pragma once

#include <string>
#include <vector>

namespace framefit {

/// One checked condition inside a verdict or membership report.
/// `witness_k` is the k-index the values refer to (-1 when not applicable).
struct Evidence {
    std::string condition;
    std::string tag;  // short reference id for the condition family
    bool pass = false;
    long witness_k = -1;
    double lhs = 0.0;
    double rhs = 0.0;
};

using EvidenceList = std::vector<Evidence>;

inline bool all_pass(const EvidenceList& ev) {
    for (const auto& e : ev)
        if (!e.pass) return false;
    return true;
}

}  // namespace framefit
