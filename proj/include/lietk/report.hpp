#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lietk {

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus status);
CheckStatus parse_check_status(std::string_view text);

/// One check inside a report. `details` and `witness` hold rationals as
/// strings; `witness` is null unless the check failed.
struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string summary;
    nlohmann::json details = nlohmann::json::object();
    nlohmann::json witness = nullptr;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
    static constexpr int current_format_version = 1;

    std::string command;
    std::string input_digest;
    nlohmann::json input = nlohmann::json::object();       // what was read (path or family)
    nlohmann::json parameters = nlohmann::json::object();  // seed, samples, suites
    std::vector<CheckRecord> records;
    std::optional<double> timing_ms;  // only emitted on request; breaks byte equality

    bool ok() const;
    std::string verdict() const { return ok() ? "ok" : "failure"; }

    friend bool operator==(const Report&, const Report&) = default;
};

/// Keys are emitted in sorted order, so equal reports give identical bytes.
std::string to_json_text(const Report& report);

/// Inverse of to_json_text. Throws std::invalid_argument on a malformed
/// report or one whose verdict disagrees with its records.
Report parse_report(std::string_view text);

}  // namespace lietk
