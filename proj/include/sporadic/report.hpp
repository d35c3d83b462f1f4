#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sporadic {

struct CongruenceRow {
    std::string family;
    long p = 0;
    long m = 0, r = 0;
    long required = 0;
    long achieved = 0;
    bool insufficient = false;  // series too short; never a silent pass
    bool pass = false;
    std::string note;
};

struct CongruenceReport {
    std::string family;
    std::vector<CongruenceRow> rows;

    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass || r.insufficient) return false;
        return true;
    }
};

enum class OutputFormat { Text, Records, Csv };

void write_report(std::ostream& os, const CongruenceReport& report, OutputFormat fmt);
void write_reports(std::ostream& os, const std::vector<CongruenceReport>& reports,
                   OutputFormat fmt);

}  // namespace sporadic
