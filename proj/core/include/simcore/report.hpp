#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace simcore {

struct CheckInstance {
    std::string params;
    bool pass = false;
    std::string detail;
};

/// Outcome of checking one statement over a finite parameter range.
struct CheckReport {
    std::string id;
    std::string range;
    std::vector<CheckInstance> instances;
    double seconds = 0.0;

    /// True only when at least one instance ran and every instance passed.
    bool passed() const noexcept;
    std::size_t failures() const noexcept;
    std::optional<CheckInstance> first_counterexample() const;
};

/// Runs body(0..count-1) on up to `jobs` threads. Instances land in index
/// order whatever the thread count, so reports are reproducible. An exception
/// escaping body is recorded as a failing instance.
CheckReport run_check(std::string id, std::string range, std::size_t count,
                      const std::function<CheckInstance(std::size_t)>& body, unsigned jobs = 1);

std::string to_json(const CheckReport& report);
std::string to_json(const std::vector<CheckReport>& reports);

/// One summary line, e.g. "[PASS] symmetry  odd s in 3..25  (12 instances, 0.01 s)".
std::string summary_line(const CheckReport& report);

/// Summary line followed by failing instances (or all, with verbose).
std::string to_text(const CheckReport& report, bool verbose = false);

}  // namespace simcore
