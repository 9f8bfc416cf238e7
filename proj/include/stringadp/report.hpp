#ifndef STRINGADP_REPORT_HPP
#define STRINGADP_REPORT_HPP

#include <ostream>

#include "stringadp/bounds.hpp"

namespace stringadp {

enum class ReportFormat { text, json, csv };

ReportFormat parse_report_format(const std::string& name); // throws ValidationError

struct CheckResult {
    std::string name;
    bool holds = false;
    double margin = 0.0; // achieved minus required, in objective units
};

/// One verification run, flattened for emission. CSV column order is
/// stable: instance_id, scheme, adp_value, optimal_value, ratio, beta,
/// then one column per check as name=pass|fail.
struct RunReport {
    std::string instance_id;
    std::string scheme;
    double adp_value = 0.0;
    double optimal_value = 0.0;
    double ratio = 0.0;
    double beta = 0.0;
    std::vector<double> epsilons;
    std::vector<double> etas;
    double shift_applied = 0.0;
    bool thm3_applicable = true; // false when some eta_k < 0
    std::vector<CheckResult> checks;

    bool all_hold() const;
};

RunReport make_run_report(const std::string& instance_id, const std::string& scheme,
                          const CurvatureReport& report);

void write_text(std::ostream& os, const RunReport& report);
void write_json_line(std::ostream& os, const RunReport& report);
void write_csv_header(std::ostream& os, const RunReport& sample);
void write_csv_row(std::ostream& os, const RunReport& report);

} // namespace stringadp

#endif
