#pragma once
#include <string>
#include <vector>

namespace bilag {

// Rendered verification output: sections of labeled exact values with
// verdicts; formats json | csv | markdown. Rationals rendered as "p/q"
// (integer when q = 1); row order deterministic.
struct ReportRow {
    std::string label;
    std::string value;
};

struct ReportSection {
    std::string title;
    std::vector<ReportRow> rows;
    std::string verdict; // "pass" | "fail" | "" (informational)
};

struct Report {
    std::vector<ReportSection> sections;
    bool all_pass() const {
        for (const auto& s : sections)
            if (s.verdict == "fail") return false;
        return true;
    }
};

enum class ReportFormat { json, csv, markdown };

std::string render(const Report& r, ReportFormat f);

} // namespace bilag
