#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace dgaut {

inline constexpr const char* kReportSchema = "dgaut.report/1";

struct ReportCheck {
    std::string name;
    std::string status;  // pass | fail | inconclusive
    std::string detail;  // residual, witness or note; empty when uninteresting
};

/// One machine-readable object per run. The overall status is "fail" when any
/// check failed, otherwise "inconclusive" when any check is, otherwise "pass".
struct Report {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::vector<ReportCheck> checks;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    explicit Report(std::string cmd) : command(std::move(cmd)) {}

    void check(const std::string& name, bool ok, const std::string& detail = {}) {
        checks.push_back({name, ok ? "pass" : "fail", detail});
    }

    void inconclusive(const std::string& name, const std::string& detail = {}) {
        checks.push_back({name, "inconclusive", detail});
    }

    std::string status() const {
        bool inc = false;
        for (const auto& c : checks) {
            if (c.status == "fail") return "fail";
            inc |= c.status == "inconclusive";
        }
        return inc ? "inconclusive" : "pass";
    }

    nlohmann::json to_json() const {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json e{{"name", c.name}, {"status", c.status}};
            if (!c.detail.empty()) e["detail"] = c.detail;
            entries.push_back(std::move(e));
        }
        return nlohmann::json{{"schema", kReportSchema},
                              {"command", command},
                              {"status", status()},
                              {"config", config},
                              {"checks", entries},
                              {"timing_ms", ms}};
    }
};

}  // namespace dgaut
