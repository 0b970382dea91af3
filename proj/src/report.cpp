#include "tilinglab/report.hpp"

#include <fstream>
#include <sstream>

#include "tilinglab/error.hpp"

namespace tilinglab {

const char* library_version() { return "tilinglab 0.1.0"; }

bool Report::all_pass() const {
    for (const auto& c : criteria)
        if (!c.pass) return false;
    return true;
}

void Report::add_row(ojson row) {
    if (!row.contains("method")) row["method"] = "";
    if (!row.contains("error_bound")) row["error_bound"] = nullptr;
    for (auto it = row.begin(); it != row.end(); ++it)
        if (std::find(columns.begin(), columns.end(), it.key()) == columns.end()) columns.push_back(it.key());
    rows.push_back(std::move(row));
}

ReportFormat parse_report_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "markdown" || name == "md") return ReportFormat::Markdown;
    throw Error(ErrorKind::ConfigError, "output format: unknown format '" + name + "'");
}

namespace {

std::string cell_text(const ojson& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::size_t passed(const Report& r) {
    return std::count_if(r.criteria.begin(), r.criteria.end(), [](const Criterion& c) { return c.pass; });
}

}  // namespace

std::string report_render(const Report& r, ReportFormat format) {
    std::ostringstream out;
    switch (format) {
    case ReportFormat::Json: {
        ojson j;
        j["experiment"] = r.experiment;
        j["inputs"] = r.inputs;
        j["columns"] = r.columns;
        j["rows"] = r.rows;
        ojson crit = ojson::array();
        for (const auto& c : r.criteria) crit.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["criteria"] = crit;
        j["all_pass"] = r.all_pass();
        j["version"] = r.version;
        j["wall_time"] = r.wall_time;
        out << j.dump(2) << "\n";
        break;
    }
    case ReportFormat::Csv:
        for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_quote(r.columns[i]);
        out << "\n";
        for (const auto& row : r.rows) {
            for (std::size_t i = 0; i < r.columns.size(); ++i) {
                const auto& c = r.columns[i];
                out << (i ? "," : "") << (row.contains(c) ? csv_quote(cell_text(row[c])) : "");
            }
            out << "\n";
        }
        break;
    case ReportFormat::Markdown:
        out << "# " << r.experiment << "\n\n";
        out << "```json\n" << r.inputs.dump(2) << "\n```\n\n";
        if (!r.columns.empty()) {
            out << "|";
            for (const auto& c : r.columns) out << " " << c << " |";
            out << "\n|";
            for (std::size_t i = 0; i < r.columns.size(); ++i) out << " --- |";
            out << "\n";
            for (const auto& row : r.rows) {
                out << "|";
                for (const auto& c : r.columns) out << " " << (row.contains(c) ? cell_text(row[c]) : "") << " |";
                out << "\n";
            }
            out << "\n";
        }
        for (const auto& c : r.criteria)
            out << "- " << (c.pass ? "PASS" : "FAIL") << " " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        out << "\n**" << passed(r) << "/" << r.criteria.size() << " criteria passed** (" << r.version << ", "
            << r.wall_time << " s)\n";
        break;
    }
    return out.str();
}

Report report_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ConfigError, std::string("report: ") + e.what());
    }
    Report r;
    try {
        r.experiment = j.at("experiment").get<std::string>();
        r.inputs = j.at("inputs");
        r.columns = j.at("columns").get<std::vector<std::string>>();
        for (const auto& row : j.at("rows")) r.rows.push_back(row);
        for (const auto& c : j.at("criteria"))
            r.criteria.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
        r.version = j.at("version").get<std::string>();
        r.wall_time = j.at("wall_time").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ConfigError, std::string("report: ") + e.what());
    }
    return r;
}

std::vector<std::string> write_outputs(const Report& r, const nlohmann::json& config) {
    std::vector<std::string> written;
    if (!config.contains("output")) return written;
    const auto& out = config["output"];
    if (!out.is_object()) throw Error(ErrorKind::ConfigError, "output: expected an object");
    for (auto it = out.begin(); it != out.end(); ++it) {
        ReportFormat f = parse_report_format(it.key());
        if (!it.value().is_string()) throw Error(ErrorKind::ConfigError, "output." + it.key() + ": expected a path");
        std::string path = it.value().get<std::string>();
        std::ofstream file(path);
        if (!file) throw Error(ErrorKind::ConfigError, "output." + it.key() + ": cannot write " + path);
        file << report_render(r, f);
        written.push_back(path);
    }
    return written;
}

}  // namespace tilinglab
