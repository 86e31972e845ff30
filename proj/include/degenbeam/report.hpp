#ifndef DEGENBEAM_REPORT_HPP
#define DEGENBEAM_REPORT_HPP

#include <string>
#include <vector>

#include "degenbeam/config.hpp"

namespace degenbeam {

/// Outcome of one scenario run. CSV files and summary.txt are written into
/// the output directory; exit_status is 0 when every invariant assertion for
/// the command held and 2 otherwise, with the violated property named in the
/// summary. CSV numbers carry 17 significant digits so that reruns are
/// byte-identical.
struct RunReport {
    ScenarioConfig config;
    int exit_status = 0;
    std::vector<std::string> summary;
    std::vector<std::string> violations;
};

RunReport run_scenario(const ScenarioConfig& config, const std::string& out_dir);

/// Formats one CSV number (17 significant digits, '.' separator).
std::string csv_number(double v);

} // namespace degenbeam

#endif
