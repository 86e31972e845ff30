#ifndef DEGENBEAM_CONFIG_HPP
#define DEGENBEAM_CONFIG_HPP

#include <string>
#include <vector>

#include "degenbeam/coefficient.hpp"

namespace degenbeam {

enum class Command { Solve, Spectrum, Converge, Greencheck };

/// Parsed scenario. Key=value lines, one per line, '#' comments. Keys:
///   command      solve | spectrum | converge | greencheck   (required)
///   form         divergence | nondivergence
///   coefficient  powerlaw | constant:<v>
///   alpha, x0, n_elements, dt, theta, T, rule_order
///   source, initial    names from the field registry
///   k            eigenvalue count (spectrum)
///   levels       doubling levels (converge)
struct ScenarioConfig {
    Command command = Command::Solve;
    OperatorForm form = OperatorForm::Divergence;
    std::string coefficient = "powerlaw";
    double alpha = 1.0;
    double x0 = 0.5;
    int n_elements = 64;
    double dt = 1e-4;
    double theta = 1.0;
    double horizon = 0.01;  // key "T"
    int rule_order = 4;
    std::string source = "zero";
    std::string initial = "power4";
    int eigenvalue_count = 12;  // key "k"
    int levels = 4;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Parses and validates. Unknown keys and malformed numbers raise
/// "parse-error" (with the key name resp. line number); duplicate keys win
/// last and append a warning.
ScenarioConfig parse_config(const std::string& text,
                            std::vector<std::string>* warnings = nullptr);

/// Inverse of parse_config up to formatting: parse_config(render_config(c)) == c.
std::string render_config(const ScenarioConfig& config);

CoefficientFunction make_scenario_coefficient(const ScenarioConfig& config);

} // namespace degenbeam

#endif
