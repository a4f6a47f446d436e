#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dessin {

struct ClaimResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;  // expected/actual diffs on failure, notes on success
};

struct VerifyReport {
    std::vector<ClaimResult> results;
    int failures = 0;
};

// tier: "core" (everything except catalog rows I..N) or "full".
VerifyReport run_verify(const std::string& tier, unsigned seed = 0);

}  // namespace dessin
