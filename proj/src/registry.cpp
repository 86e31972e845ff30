#include "degenbeam/registry.hpp"

#include <cmath>
#include <cstdlib>

#include "degenbeam/errors.hpp"

namespace degenbeam {

namespace {

bool parse_suffix(const std::string& spec, const std::string& prefix, double& out) {
    if (spec.rfind(prefix, 0) != 0) return false;
    const std::string tail = spec.substr(prefix.size());
    char* end = nullptr;
    out = std::strtod(tail.c_str(), &end);
    if (end == tail.c_str() || *end != '\0')
        fail("parse-error", "malformed number in field spec '" + spec + "'");
    return true;
}

} // namespace

NamedField make_named_field(const std::string& spec, double x0) {
    NamedField field;
    field.spec = spec;
    double c = 0.0;
    if (spec == "zero") {
        field.value = [](double) { return 0.0; };
        field.slope = [](double) { return 0.0; };
    } else if (parse_suffix(spec, "const:", c)) {
        field.value = [c](double) { return c; };
        field.slope = [](double) { return 0.0; };
    } else if (spec == "power4") {
        field.value = [](double x) {
            const double y = x * (1.0 - x);
            return y * y * y * y;
        };
        field.slope = [](double x) {
            const double y = x * (1.0 - x);
            return 4.0 * y * y * y * (1.0 - 2.0 * x);
        };
    } else if (parse_suffix(spec, "sin:", c)) {
        field.value = [c](double x) { return std::sin(c * M_PI * x); };
        field.slope = [c](double x) { return c * M_PI * std::cos(c * M_PI * x); };
    } else if (spec == "linear_from_x0") {
        field.value = [x0](double x) { return x - x0; };
        field.slope = [](double) { return 1.0; };
    } else {
        fail("parse-error", "unknown field name '" + spec + "'");
    }
    return field;
}

std::function<double(double, double)> make_named_source(const std::string& spec,
                                                        double x0) {
    NamedField field = make_named_field(spec, x0);
    return [value = field.value](double, double x) { return value(x); };
}

} // namespace degenbeam
