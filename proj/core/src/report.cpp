#include "simcore/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <thread>

#include <json.hpp>

namespace simcore {

bool CheckReport::passed() const noexcept {
    return !instances.empty() &&
           std::all_of(instances.begin(), instances.end(), [](const CheckInstance& c) { return c.pass; });
}

std::size_t CheckReport::failures() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [](const CheckInstance& c) { return !c.pass; }));
}

std::optional<CheckInstance> CheckReport::first_counterexample() const {
    for (const auto& c : instances) {
        if (!c.pass) {
            return c;
        }
    }
    return std::nullopt;
}

CheckReport run_check(std::string id, std::string range, std::size_t count,
                      const std::function<CheckInstance(std::size_t)>& body, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport report{std::move(id), std::move(range), std::vector<CheckInstance>(count), 0.0};
    auto guarded = [&](std::size_t i) {
        try {
            report.instances[i] = body(i);
        } catch (const std::exception& e) {
            report.instances[i] = {"#" + std::to_string(i), false, std::string("exception: ") + e.what()};
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            guarded(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    guarded(i);
                }
            });
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

nlohmann::json report_json(const CheckReport& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["range"] = r.range;
    j["passed"] = r.passed();
    j["instances_tested"] = r.instances.size();
    j["failures"] = r.failures();
    j["seconds"] = r.seconds;
    auto list = nlohmann::json::array();
    for (const auto& c : r.instances) {
        list.push_back({{"params", c.params}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["instances"] = std::move(list);
    if (auto ce = r.first_counterexample()) {
        j["first_counterexample"] = {{"params", ce->params}, {"detail", ce->detail}};
    } else {
        j["first_counterexample"] = nullptr;
    }
    return j;
}

}  // namespace

std::string to_json(const CheckReport& report) { return report_json(report).dump(2); }

std::string to_json(const std::vector<CheckReport>& reports) {
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
    }
    nlohmann::json j;
    j["reports"] = std::move(arr);
    j["passed"] = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); }) &&
                  !reports.empty();
    return j.dump(2);
}

std::string summary_line(const CheckReport& report) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", report.seconds);
    std::string status = report.instances.empty() ? "[NONE]" : (report.passed() ? "[PASS]" : "[FAIL]");
    return status + " " + report.id + "  " + report.range + "  (" + std::to_string(report.instances.size()) +
           " instances, " + std::to_string(report.failures()) + " failed, " + secs + " s)";
}

std::string to_text(const CheckReport& report, bool verbose) {
    std::string out = summary_line(report) + "\n";
    for (const auto& c : report.instances) {
        if (verbose || !c.pass) {
            out += std::string("    ") + (c.pass ? "ok   " : "FAIL ") + c.params + ": " + c.detail + "\n";
        }
    }
    return out;
}

}  // namespace simcore
