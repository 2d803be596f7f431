#include "ttw/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ttw {

namespace {
const char* status_name(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::Pass: return "PASS";
        case CheckResult::Status::Fail: return "FAIL";
        case CheckResult::Status::Skipped: return "SKIPPED";
    }
    return "?";
}
}  // namespace

std::string VerificationReport::to_text(bool with_timing) const {
    std::ostringstream os;
    os << "suite " << suite_ << "\n";
    for (const auto& c : checks_) {
        os << "  [" << status_name(c.status) << "] " << c.id;
        if (!c.detail.empty()) os << ": " << c.detail;
        if (with_timing) os << " (" << c.elapsed_ms << " ms)";
        os << "\n";
    }
    os << "overall " << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json doc;
    doc["suite"] = suite_;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["status"] = status_name(c.status);
        e["detail"] = c.detail;
        if (with_timing) e["elapsed_ms"] = c.elapsed_ms;
        arr.push_back(std::move(e));
    }
    doc["checks"] = std::move(arr);
    doc["overall"] = passed() ? "PASS" : "FAIL";
    return doc.dump();
}

}  // namespace ttw
