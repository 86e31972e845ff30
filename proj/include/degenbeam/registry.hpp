#ifndef DEGENBEAM_REGISTRY_HPP
#define DEGENBEAM_REGISTRY_HPP

#include <functional>
#include <string>

namespace degenbeam {

/// Named spatial fields for sources and initial data. Specs:
///   zero            0
///   const:c         the constant c
///   power4          x^4 (1-x)^4
///   sin:k           sin(k pi x)
///   linear_from_x0  x - x0
/// Unknown names raise "parse-error".
struct NamedField {
    std::string spec;
    std::function<double(double)> value;
    std::function<double(double)> slope;
};

NamedField make_named_field(const std::string& spec, double x0);

/// Time-independent source h(t, x) = field(x) from the same registry.
std::function<double(double, double)> make_named_source(const std::string& spec,
                                                        double x0);

} // namespace degenbeam

#endif
