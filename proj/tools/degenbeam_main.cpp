#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "degenbeam/errors.hpp"
#include "degenbeam/report.hpp"

namespace {

void usage() {
    std::fprintf(stderr, "usage: degenbeam <config-path> [--out DIR]\n");
}

} // namespace

int main(int argc, char** argv) {
    std::string config_path;
    std::string out_dir = ".";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--out") {
            if (i + 1 >= argc) {
                usage();
                return 1;
            }
            out_dir = argv[++i];
        } else if (arg == "--help" || arg == "-h") {
            usage();
            return 0;
        } else if (config_path.empty()) {
            config_path = arg;
        } else {
            usage();
            return 1;
        }
    }
    if (config_path.empty()) {
        usage();
        return 1;
    }

    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "io-error: cannot read %s\n", config_path.c_str());
        return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();

    try {
        std::vector<std::string> warnings;
        const degenbeam::ScenarioConfig config =
            degenbeam::parse_config(text.str(), &warnings);
        for (const std::string& w : warnings)
            std::fprintf(stderr, "warning: %s\n", w.c_str());
        const degenbeam::RunReport report = degenbeam::run_scenario(config, out_dir);
        for (const std::string& line : report.summary) std::puts(line.c_str());
        for (const std::string& line : report.violations)
            std::printf("violation: %s\n", line.c_str());
        return report.exit_status;
    } catch (const degenbeam::Error& err) {
        std::fprintf(stderr, "%s\n", err.what());
        return 1;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
}
