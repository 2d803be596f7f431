#pragma once

#include <string>
#include <vector>

#include "ttw/rational.hpp"

namespace ttw {

// Structured pass/fail record per identity check. Serialization is
// deterministic; timing fields can be suppressed for byte-stable output.
struct CheckResult {
    enum class Status { Pass, Fail, Skipped };
    std::string id;
    Status status = Status::Pass;
    std::string detail;
    long elapsed_ms = 0;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    void add(std::string id, CheckResult::Status status, std::string detail = "",
             long elapsed_ms = 0) {
        checks_.push_back({std::move(id), status, std::move(detail), elapsed_ms});
    }
    void add_pass(std::string id, std::string detail = "", long ms = 0) {
        add(std::move(id), CheckResult::Status::Pass, std::move(detail), ms);
    }
    void add_fail(std::string id, std::string detail = "", long ms = 0) {
        add(std::move(id), CheckResult::Status::Fail, std::move(detail), ms);
    }
    void add_skip(std::string id, std::string detail = "", long ms = 0) {
        add(std::move(id), CheckResult::Status::Skipped, std::move(detail), ms);
    }
    void merge(const VerificationReport& other) {
        for (const auto& c : other.checks_) checks_.push_back(c);
    }

    const std::string& suite() const { return suite_; }
    const std::vector<CheckResult>& checks() const { return checks_; }
    bool passed() const {
        for (const auto& c : checks_)
            if (c.status == CheckResult::Status::Fail) return false;
        return true;
    }

    std::string to_text(bool with_timing = true) const;
    std::string to_json(bool with_timing = true) const;

private:
    std::string suite_;
    std::vector<CheckResult> checks_;
};

}  // namespace ttw
