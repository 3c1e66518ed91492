#pragma once

// One-shot replay of every claim the library is built to certify: gadget
// census and forcing, the two-gadget counterexample at palettes 4 and 5,
// degree facts, the disconnected variant, the K4 composite, and the SAT
// cross-check. Each claim is budgeted on its own so one hard claim cannot
// starve the rest.

#include <fumlab/fum.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fumlab {

struct ClaimResult {
    enum class Status { Pass, Fail, BudgetExceeded };

    std::string id;
    std::string description;  // what is being checked, in prose
    std::string anchor;       // the formal statement the check certifies
    std::string evidence;     // what the run actually found
    Status status = Status::Fail;
    double wall_time_s = 0.0;
};

struct VerificationReport {
    std::vector<ClaimResult> claims;

    bool overall() const;
    int passed() const;
};

struct VerifyOptions {
    std::uint64_t budget_nodes = 1'000'000'000;  // per claim
    double budget_seconds = 600.0;               // per claim
    int threads = 1;
    bool tamper_gadget = false;  // testing hook: break one H_1 spoke first
};

/// Runs the ten claims in a fixed order. Individual failures are recorded,
/// never thrown; two runs produce identical reports modulo wall times.
VerificationReport run_verification(const VerifyOptions& opts = {});

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

}  // namespace fumlab
