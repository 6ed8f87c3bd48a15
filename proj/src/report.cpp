#include "tlie/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace tlie {

std::string_view status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

void CheckRecord::record_failure(Witness w) {
    ++failures;
    status = CheckStatus::Fail;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

bool VerificationReport::all_passed() const {
    return !any_failed();
}

bool VerificationReport::any_failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
}

nlohmann::json witness_json(const TLieSpec& spec, const Witness& w) {
    nlohmann::json inputs = nlohmann::json::array();
    for (Letter l : w.inputs) inputs.push_back(spec.id(l));
    nlohmann::json out{{"input", inputs}, {"discrepancy", format_poly(spec, w.discrepancy)}};
    if (!w.label.empty()) out["identity"] = w.label;
    return out;
}

nlohmann::json check_json(const TLieSpec& spec, const CheckRecord& record) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : record.witnesses) witnesses.push_back(witness_json(spec, w));
    return {{"check", record.check},
            {"status", status_name(record.status)},
            {"cases", record.cases},
            {"failures", record.failures},
            {"witnesses", witnesses},
            {"parameters", record.parameters},
            {"wall_time_ms", record.wall_time_ms},
            {"notes", record.notes}};
}

nlohmann::json report_json(const TLieSpec& spec, const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) checks.push_back(check_json(spec, c));
    return {{"spec", report.spec_name}, {"all_passed", report.all_passed()}, {"checks", checks}};
}

std::string report_table(const TLieSpec& spec, const VerificationReport& report) {
    std::ostringstream out;
    out << "spec: " << report.spec_name << "\n";
    out << std::left << std::setw(18) << "check" << std::setw(9) << "status" << std::setw(10) << "cases"
        << std::setw(10) << "failures" << "time(ms)\n";
    for (const auto& c : report.checks) {
        out << std::left << std::setw(18) << c.check << std::setw(9) << status_name(c.status) << std::setw(10)
            << c.cases << std::setw(10) << c.failures << std::fixed << std::setprecision(1) << c.wall_time_ms << "\n";
        for (const auto& n : c.notes) out << "    note: " << n << "\n";
        for (const auto& w : c.witnesses) {
            out << "    witness (";
            for (std::size_t i = 0; i < w.inputs.size(); ++i) out << (i ? ", " : "") << spec.id(w.inputs[i]);
            out << ")";
            if (!w.label.empty()) out << " [" << w.label << "]";
            out << ": " << format_poly(spec, w.discrepancy) << "\n";
        }
    }
    return out.str();
}

}  // namespace tlie
