#pragma once

#include <string>
#include <vector>

namespace gabdyn {

/// Outcome of one verified identity.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// A flat list of check outcomes; verification drivers merge these.
struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, bool passed, std::string detail = "") {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool ok() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return true;
    }
    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const CheckResult& c : checks)
            if (!c.passed) ++n;
        return n;
    }
    std::vector<CheckResult> failures() const {
        std::vector<CheckResult> out;
        for (const CheckResult& c : checks)
            if (!c.passed) out.push_back(c);
        return out;
    }
};

/// Throws verification_error listing every failed check.
void require_ok(const Report& report, const std::string& context);

}  // namespace gabdyn
