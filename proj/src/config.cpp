#include "degenbeam/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "degenbeam/errors.hpp"
#include "degenbeam/registry.hpp"

namespace degenbeam {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void line_error(int line, const std::string& what) {
    fail("parse-error", "line " + std::to_string(line) + ": " + what);
}

double parse_number(const std::string& value, const std::string& key, int line) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        line_error(line, "malformed number '" + value + "' for key '" + key + "'");
    return v;
}

int parse_int(const std::string& value, const std::string& key, int line) {
    const double v = parse_number(value, key, line);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        line_error(line, "expected an integer for key '" + key + "'");
    return i;
}

} // namespace

ScenarioConfig parse_config(const std::string& text,
                            std::vector<std::string>* warnings) {
    ScenarioConfig cfg;
    std::set<std::string> seen;
    bool have_command = false;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) line_error(line_no, "expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) line_error(line_no, "empty key");

        if (!seen.insert(key).second && warnings)
            warnings->push_back("line " + std::to_string(line_no) + ": duplicate key '" +
                                key + "' overrides the earlier value");

        if (key == "command") {
            if (value == "solve") cfg.command = Command::Solve;
            else if (value == "spectrum") cfg.command = Command::Spectrum;
            else if (value == "converge") cfg.command = Command::Converge;
            else if (value == "greencheck") cfg.command = Command::Greencheck;
            else line_error(line_no, "unknown command '" + value + "'");
            have_command = true;
        } else if (key == "form") {
            if (value == "divergence") cfg.form = OperatorForm::Divergence;
            else if (value == "nondivergence") cfg.form = OperatorForm::NonDivergence;
            else line_error(line_no, "unknown form '" + value + "'");
        } else if (key == "coefficient") {
            if (value != "powerlaw" && value.rfind("constant:", 0) != 0)
                line_error(line_no, "coefficient must be powerlaw or constant:<v>");
            if (value.rfind("constant:", 0) == 0)
                (void)parse_number(value.substr(9), key, line_no);
            cfg.coefficient = value;
        } else if (key == "alpha") {
            cfg.alpha = parse_number(value, key, line_no);
            if (!(cfg.alpha > 0.0)) line_error(line_no, "invalid-exponent: alpha must be > 0");
        } else if (key == "x0") {
            cfg.x0 = parse_number(value, key, line_no);
            if (!(cfg.x0 >= 0.0 && cfg.x0 <= 1.0))
                line_error(line_no, "invalid-point: x0 must lie in [0,1]");
        } else if (key == "n_elements") {
            cfg.n_elements = parse_int(value, key, line_no);
            if (cfg.n_elements < 2) line_error(line_no, "too-coarse: n_elements must be >= 2");
        } else if (key == "dt") {
            cfg.dt = parse_number(value, key, line_no);
            if (!(cfg.dt > 0.0)) line_error(line_no, "invalid-step: dt must be > 0");
        } else if (key == "theta") {
            cfg.theta = parse_number(value, key, line_no);
            if (!(cfg.theta >= 0.0 && cfg.theta <= 1.0))
                line_error(line_no, "invalid-scheme: theta must lie in [0,1]");
        } else if (key == "T") {
            cfg.horizon = parse_number(value, key, line_no);
            if (!(cfg.horizon > 0.0)) line_error(line_no, "T must be > 0");
        } else if (key == "rule_order") {
            cfg.rule_order = parse_int(value, key, line_no);
            if (cfg.rule_order < 2 || cfg.rule_order > 16)
                line_error(line_no, "rule_order must lie in [2,16]");
        } else if (key == "source") {
            try {
                (void)make_named_field(value, cfg.x0);
            } catch (const Error& err) {
                line_error(line_no, err.what());
            }
            cfg.source = value;
        } else if (key == "initial") {
            try {
                (void)make_named_field(value, cfg.x0);
            } catch (const Error& err) {
                line_error(line_no, err.what());
            }
            cfg.initial = value;
        } else if (key == "k") {
            cfg.eigenvalue_count = parse_int(value, key, line_no);
            if (cfg.eigenvalue_count < 1) line_error(line_no, "k must be >= 1");
        } else if (key == "levels") {
            cfg.levels = parse_int(value, key, line_no);
            if (cfg.levels < 2 || cfg.levels > 8)
                line_error(line_no, "levels must lie in [2,8]");
        } else {
            fail("parse-error", "unknown key '" + key + "' on line " +
                                    std::to_string(line_no));
        }
    }
    if (!have_command) fail("parse-error", "missing required key \"command\"");
    return cfg;
}

namespace {
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
} // namespace

std::string render_config(const ScenarioConfig& c) {
    std::ostringstream out;
    out << "command=";
    switch (c.command) {
        case Command::Solve: out << "solve"; break;
        case Command::Spectrum: out << "spectrum"; break;
        case Command::Converge: out << "converge"; break;
        case Command::Greencheck: out << "greencheck"; break;
    }
    out << "\nform="
        << (c.form == OperatorForm::Divergence ? "divergence" : "nondivergence");
    out << "\ncoefficient=" << c.coefficient;
    out << "\nalpha=" << num(c.alpha);
    out << "\nx0=" << num(c.x0);
    out << "\nn_elements=" << c.n_elements;
    out << "\ndt=" << num(c.dt);
    out << "\ntheta=" << num(c.theta);
    out << "\nT=" << num(c.horizon);
    out << "\nrule_order=" << c.rule_order;
    out << "\nsource=" << c.source;
    out << "\ninitial=" << c.initial;
    out << "\nk=" << c.eigenvalue_count;
    out << "\nlevels=" << c.levels;
    out << "\n";
    return out.str();
}

CoefficientFunction make_scenario_coefficient(const ScenarioConfig& c) {
    if (c.coefficient.rfind("constant:", 0) == 0) {
        const double v = std::strtod(c.coefficient.c_str() + 9, nullptr);
        return make_constant_coefficient(v, c.x0);
    }
    return make_power_coefficient(c.alpha, c.x0);
}

} // namespace degenbeam
