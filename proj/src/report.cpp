#include "sporadic/report.hpp"

#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace sporadic {

namespace {

nlohmann::json row_to_json(const CongruenceRow& r) {
    nlohmann::json j{{"family", r.family}, {"p", r.p},        {"m", r.m},
                     {"r", r.r},           {"required", r.required},
                     {"achieved", r.achieved}, {"pass", r.pass}};
    if (r.insufficient) j["insufficient"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

void write_rows_text(std::ostream& os, const CongruenceReport& rep) {
    os << "== " << rep.family << " ==\n";
    os << std::left << std::setw(6) << "p" << std::setw(5) << "m" << std::setw(5) << "r"
       << std::setw(10) << "required" << std::setw(10) << "achieved" << std::setw(6) << "pass"
       << "note\n";
    for (const auto& r : rep.rows) {
        os << std::left << std::setw(6) << r.p << std::setw(5) << r.m << std::setw(5) << r.r
           << std::setw(10) << r.required << std::setw(10)
           << (r.insufficient ? std::string("n/a") : std::to_string(r.achieved)) << std::setw(6)
           << (r.insufficient ? "DATA" : (r.pass ? "ok" : "FAIL")) << r.note << "\n";
    }
    os << (rep.all_pass() ? "all rows pass" : "FAILURES present") << "\n";
}

}  // namespace

void write_report(std::ostream& os, const CongruenceReport& rep, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Text:
            write_rows_text(os, rep);
            break;
        case OutputFormat::Records:
            for (const auto& r : rep.rows) os << row_to_json(r).dump() << "\n";
            break;
        case OutputFormat::Csv:
            os << "family,p,m,r,required,achieved,pass\n";
            for (const auto& r : rep.rows)
                os << r.family << "," << r.p << "," << r.m << "," << r.r << "," << r.required
                   << "," << (r.insufficient ? std::string("n/a") : std::to_string(r.achieved))
                   << "," << (r.pass ? "true" : "false") << "\n";
            break;
    }
}

void write_reports(std::ostream& os, const std::vector<CongruenceReport>& reports,
                   OutputFormat fmt) {
    bool first = true;
    for (const auto& rep : reports) {
        if (fmt == OutputFormat::Text && !first) os << "\n";
        if (fmt == OutputFormat::Csv && !first) {
            for (const auto& r : rep.rows)
                os << r.family << "," << r.p << "," << r.m << "," << r.r << "," << r.required
                   << "," << (r.insufficient ? std::string("n/a") : std::to_string(r.achieved))
                   << "," << (r.pass ? "true" : "false") << "\n";
            continue;
        }
        write_report(os, rep, fmt);
        first = false;
    }
}

}  // namespace sporadic
