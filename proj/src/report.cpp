#include "windmill/report.hpp"

#include <stdexcept>

namespace windmill {

nlohmann::json to_json(const Report& r) {
    return {
        {"schema_version", kReportSchemaVersion},
        {"command", r.command},
        {"inputs", r.inputs},
        {"results", r.results},
        {"timing_ms", r.timing_ms},
    };
}

Report report_from_json(const nlohmann::json& j) {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
        throw std::runtime_error("unsupported report schema version");
    }
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    r.timing_ms = j.at("timing_ms").get<double>();
    return r;
}

}  // namespace windmill
