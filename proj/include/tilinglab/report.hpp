#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace tilinglab {

using ojson = nlohmann::ordered_json;

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Rows are objects keyed by the column names; every table carries "method"
// and "error_bound" columns.
struct Report {
    std::string experiment;
    ojson inputs = ojson::object();
    std::vector<std::string> columns;
    std::vector<ojson> rows;
    std::vector<Criterion> criteria;
    std::string version;
    double wall_time = 0;

    bool all_pass() const;
    void add_row(ojson row);
};

enum class ReportFormat { Json, Csv, Markdown };

ReportFormat parse_report_format(const std::string& name);
std::string report_render(const Report& r, ReportFormat format);
Report report_from_json(const std::string& text);

const char* library_version();

// Config document: {"experiment": id, "parameters": {...}, "output": {"json": path, ...}}.
Report run_experiment(const nlohmann::json& config);
std::vector<std::string> experiment_names();

// Writes each format named in config["output"]; returns the paths written.
std::vector<std::string> write_outputs(const Report& r, const nlohmann::json& config);

}  // namespace tilinglab
