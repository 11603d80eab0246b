#pragma once

#include <json.hpp>

#include <string>

namespace windmill {

inline constexpr int kReportSchemaVersion = 1;

/// Envelope for every JSON document the CLI prints.
struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    double timing_ms = 0.0;

    bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& r);

/// Throws nlohmann::json::exception on missing or mistyped fields.
Report report_from_json(const nlohmann::json& j);

}  // namespace windmill
