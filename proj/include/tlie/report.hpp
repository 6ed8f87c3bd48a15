#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "tlie/core.hpp"

namespace tlie {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus status);

// A failing input tuple together with the nonzero difference between the two
// sides of the identity being checked.
struct Witness {
    Word inputs;
    TensorPoly discrepancy;
    std::string label;  // which identity, when a check has several
};

struct CheckRecord {
    std::string check;
    CheckStatus status = CheckStatus::Pass;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<Witness> witnesses;  // the first few failures
    nlohmann::json parameters = nlohmann::json::object();
    double wall_time_ms = 0.0;
    std::vector<std::string> notes;

    static constexpr std::size_t kMaxWitnesses = 8;
    // Counts a failing case and keeps it if there is room.
    void record_failure(Witness w);
    bool passed() const { return status == CheckStatus::Pass; }
};

struct VerificationReport {
    std::string spec_name;
    std::vector<CheckRecord> checks;

    bool all_passed() const;  // skipped checks do not count as failures
    bool any_failed() const;
};

nlohmann::json witness_json(const TLieSpec& spec, const Witness& w);
nlohmann::json check_json(const TLieSpec& spec, const CheckRecord& record);
nlohmann::json report_json(const TLieSpec& spec, const VerificationReport& report);
std::string report_table(const TLieSpec& spec, const VerificationReport& report);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace tlie
