#include "bilag/report.hpp"
#include "json.hpp"
#include <sstream>

namespace bilag {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

} // namespace

std::string render(const Report& r, ReportFormat f) {
    if (f == ReportFormat::json) {
        nlohmann::json j;
        j["sections"] = nlohmann::json::array();
        for (const auto& s : r.sections) {
            nlohmann::json js;
            js["title"] = s.title;
            js["verdict"] = s.verdict;
            js["rows"] = nlohmann::json::array();
            for (const auto& row : s.rows)
                js["rows"].push_back({{"label", row.label}, {"value", row.value}});
            j["sections"].push_back(std::move(js));
        }
        return j.dump() + "\n";
    }
    if (f == ReportFormat::csv) {
        std::ostringstream out;
        out << "section,label,value,verdict\n";
        for (const auto& s : r.sections) {
            if (s.rows.empty()) {
                out << csv_field(s.title) << ",,," << csv_field(s.verdict) << "\n";
                continue;
            }
            for (const auto& row : s.rows)
                out << csv_field(s.title) << "," << csv_field(row.label) << ","
                    << csv_field(row.value) << "," << csv_field(s.verdict) << "\n";
        }
        return out.str();
    }
    std::ostringstream out;
    for (const auto& s : r.sections) {
        out << "## " << s.title << "\n\n";
        if (!s.rows.empty()) {
            out << "| label | value |\n| --- | --- |\n";
            for (const auto& row : s.rows)
                out << "| " << md_cell(row.label) << " | " << md_cell(row.value) << " |\n";
            out << "\n";
        }
        if (!s.verdict.empty()) out << "verdict: " << s.verdict << "\n\n";
    }
    return out.str();
}

} // namespace bilag
