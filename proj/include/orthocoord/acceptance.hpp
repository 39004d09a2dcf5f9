#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orthocoord/rep.hpp"

namespace orthocoord::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;  // counts on success, first failure otherwise
    Report report;
    bool within_time() const { return seconds < limit_seconds; }
    bool pass() const { return report.pass() && within_time(); }
};

/// Criteria 1..9 are in-process library suites. Criterion 10 runs the CLI
/// end to end and lives with the acceptance binary.
constexpr int library_criteria = 9;

CriterionResult run_criterion(int id, std::uint64_t seed);
/// Runs 1..9 in order; `progress` sees each result as soon as it is ready.
std::vector<CriterionResult> run_all(std::uint64_t seed,
                                     const std::function<void(const CriterionResult&)>& progress = {});

/// "[PASS] 3 Fact 3 ... (0.12 s / 30 s): detail"
std::string summary_line(const CriterionResult& r);

}  // namespace orthocoord::acceptance
