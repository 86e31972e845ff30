#ifndef DEGENBEAM_ERRORS_HPP
#define DEGENBEAM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace degenbeam {

// All failures carry a stable kebab-case code ("invalid-exponent",
// "divergent-integral", ...) that also shows up in CLI summaries.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

} // namespace degenbeam

#endif
