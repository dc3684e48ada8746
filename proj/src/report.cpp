#include "gabdyn/report.hpp"

#include "gabdyn/errors.hpp"

namespace gabdyn {

void require_ok(const Report& report, const std::string& context) {
    if (report.ok()) return;
    std::string msg = context + ": " + std::to_string(report.failure_count()) + " check(s) failed:";
    for (const CheckResult& c : report.failures()) {
        msg += "\n  " + c.name;
        if (!c.detail.empty()) msg += ": " + c.detail;
    }
    throw verification_error(msg);
}

}  // namespace gabdyn
