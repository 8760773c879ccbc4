#include "lietk/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace lietk {

using nlohmann::json;

std::string to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skip:
        return "skip";
    }
    return "?";
}

CheckStatus parse_check_status(std::string_view text)
{
    if (text == "pass") {
        return CheckStatus::pass;
    }
    if (text == "fail") {
        return CheckStatus::fail;
    }
    if (text == "skip") {
        return CheckStatus::skip;
    }
    throw std::invalid_argument("unknown check status '" + std::string(text) + "'");
}

bool Report::ok() const
{
    return std::none_of(records.begin(), records.end(),
                        [](const CheckRecord& r) { return r.status == CheckStatus::fail; });
}

std::string to_json_text(const Report& report)
{
    json doc;
    doc["format_version"] = Report::current_format_version;
    doc["command"] = report.command;
    doc["input_digest"] = report.input_digest;
    doc["input"] = report.input;
    doc["parameters"] = report.parameters;
    doc["verdict"] = report.verdict();
    doc["records"] = json::array();
    for (const auto& r : report.records) {
        doc["records"].push_back({{"name", r.name},
                                  {"status", to_string(r.status)},
                                  {"summary", r.summary},
                                  {"details", r.details},
                                  {"witness", r.witness}});
    }
    if (report.timing_ms) {
        doc["timing_ms"] = *report.timing_ms;
    }
    return doc.dump(2) + "\n";
}

Report parse_report(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("format_version").get<int>() != Report::current_format_version) {
            throw std::invalid_argument("unsupported report format_version");
        }
        Report report;
        report.command = doc.at("command").get<std::string>();
        report.input_digest = doc.at("input_digest").get<std::string>();
        report.input = doc.at("input");
        report.parameters = doc.at("parameters");
        for (const auto& r : doc.at("records")) {
            CheckRecord record;
            record.name = r.at("name").get<std::string>();
            record.status = parse_check_status(r.at("status").get<std::string>());
            record.summary = r.at("summary").get<std::string>();
            record.details = r.at("details");
            record.witness = r.at("witness");
            report.records.push_back(std::move(record));
        }
        if (doc.contains("timing_ms")) {
            report.timing_ms = doc["timing_ms"].get<double>();
        }
        if (doc.at("verdict").get<std::string>() != report.verdict()) {
            throw std::invalid_argument("report verdict disagrees with its records");
        }
        return report;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

}  // namespace lietk
