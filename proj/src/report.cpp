#include "degenbeam/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "degenbeam/errors.hpp"
#include "degenbeam/manufactured.hpp"
#include "degenbeam/registry.hpp"
#include "degenbeam/solver.hpp"
#include "degenbeam/verification.hpp"

namespace degenbeam {

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("io-error", "cannot open " + path.string() + " for writing");
    out << content;
    if (!out) fail("io-error", "write failed for " + path.string());
}

struct ScenarioContext {
    ScenarioConfig cfg;
    RunReport report;
    std::ostringstream csv;
    std::string csv_name;

    void violated(const std::string& what) {
        report.violations.push_back(what);
        report.exit_status = 2;
    }
    void note(const std::string& line) { report.summary.push_back(line); }
};

void run_solve(ScenarioContext& ctx) {
    const ScenarioConfig& cfg = ctx.cfg;
    const CoefficientFunction a = make_scenario_coefficient(cfg);
    const NamedField u0 = make_named_field(cfg.initial, cfg.x0);
    ProblemSpec spec =
        make_problem_spec(cfg.form, a, make_named_source(cfg.source, cfg.x0), u0.value,
                          u0.slope, cfg.horizon, cfg.dt, cfg.theta);
    const Grid grid = build_grid(cfg.n_elements, spec.a.degenerate ? spec.a.x0 : cfg.x0);
    QuadratureSettings qs;
    qs.rule_order = cfg.rule_order;
    const DiscreteSystem system = assemble_system(spec, grid, qs);
    const Trajectory traj = evolve(spec, system);

    ctx.csv_name = "trajectory.csv";
    ctx.csv << "step,time,pivot_norm,energy\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        ctx.csv << i << ',' << csv_number(traj.times[i]) << ','
                << csv_number(traj.pivot_norms[i]) << ','
                << csv_number(traj.energies[i]) << '\n';
    }

    if (spec.hypothesis && !spec.hypothesis->satisfied)
        ctx.note("warning: structural hypothesis on a not satisfied at the checked K");

    for (double n : traj.pivot_norms) {
        if (!std::isfinite(n)) {
            ctx.violated("pivot norm not finite");
            break;
        }
    }
    if (cfg.source == "zero" && cfg.theta >= 0.5) {
        double worst = 0.0;
        for (std::size_t i = 0; i + 1 < traj.pivot_norms.size(); ++i) {
            const double slack = 1e-12 * std::max(1.0, traj.pivot_norms[i]);
            worst = std::max(worst, traj.pivot_norms[i + 1] - traj.pivot_norms[i] - slack);
        }
        if (worst > 0.0) ctx.violated("contraction: pivot norm increased by " +
                                      csv_number(worst));
        else ctx.note("contraction: pivot norm non-increasing at every step");
    }
    ctx.note("final pivot norm: " + csv_number(traj.pivot_norms.back()));
    ctx.note("final energy: " + csv_number(traj.energies.back()));
}

void run_spectrum(ScenarioContext& ctx) {
    const ScenarioConfig& cfg = ctx.cfg;
    const CoefficientFunction a = make_scenario_coefficient(cfg);
    ProblemSpec spec = make_problem_spec(
        cfg.form, a, [](double, double) { return 0.0; }, [](double) { return 0.0; },
        [](double) { return 0.0; }, cfg.horizon, cfg.dt, cfg.theta);
    const Grid grid = build_grid(cfg.n_elements, spec.a.degenerate ? spec.a.x0 : cfg.x0);
    QuadratureSettings qs;
    qs.rule_order = cfg.rule_order;
    const DiscreteSystem system = assemble_system(spec, grid, qs);
    if (spec.hypothesis && !spec.hypothesis->satisfied)
        ctx.note("warning: structural hypothesis on a not satisfied at the checked K");
    const std::vector<double> evs = dense_spectrum(system, cfg.eigenvalue_count);

    ctx.csv_name = "spectrum.csv";
    ctx.csv << "index,eigenvalue\n";
    for (std::size_t i = 0; i < evs.size(); ++i)
        ctx.csv << (i + 1) << ',' << csv_number(evs[i]) << '\n';

    const double floor = -1e-9 * system.S.inf_norm();
    ctx.note("min eigenvalue: " + csv_number(evs.front()));
    if (evs.front() < floor)
        ctx.violated("negative eigenvalue below tolerance: " + csv_number(evs.front()));
}

void run_converge(ScenarioContext& ctx) {
    const ScenarioConfig& cfg = ctx.cfg;
    const CoefficientFunction a = make_scenario_coefficient(cfg);
    const ManufacturedCase mc = make_manufactured_case(cfg.form, a);
    QuadratureSettings qs;
    qs.rule_order = cfg.rule_order;
    const ConvergenceTable table = manufactured_convergence(
        mc, cfg.n_elements, cfg.levels, cfg.horizon, cfg.dt, cfg.theta, qs);

    ctx.csv_name = "convergence.csv";
    ctx.csv << "level,n,error,order\n";
    for (std::size_t i = 0; i < table.levels.size(); ++i) {
        ctx.csv << i << ',' << table.levels[i] << ',' << csv_number(table.errors[i])
                << ',' << (i == 0 ? "nan" : csv_number(table.observed_orders[i - 1]))
                << '\n';
    }

    ctx.note("manufactured case: " + mc.name);
    for (std::size_t i = 0; i + 1 < table.errors.size(); ++i) {
        if (!(table.errors[i + 1] < table.errors[i])) {
            ctx.violated("errors not strictly decreasing between levels " +
                         std::to_string(i) + " and " + std::to_string(i + 1));
        }
    }
    if (!table.observed_orders.empty()) {
        ctx.note("final observed order: " + csv_number(table.observed_orders.back()));
        if (!a.degenerate && table.observed_orders.back() < 3.5)
            ctx.violated("smooth-case observed order below 3.5");
    }
}

void run_greencheck(ScenarioContext& ctx) {
    const auto battery = green_identity_battery(std::max(6, ctx.cfg.rule_order));
    ctx.csv_name = "residuals.csv";
    ctx.csv << "case,residual\n";
    double worst = 0.0;
    for (const auto& [name, residual] : battery) {
        ctx.csv << '"' << name << "\"," << csv_number(residual) << '\n';
        worst = std::max(worst, residual);
    }
    ctx.note("max residual: " + csv_number(worst));
    if (worst > 1e-8) ctx.violated("integration-by-parts residual above 1e-8");
}

} // namespace

RunReport run_scenario(const ScenarioConfig& config, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) fail("io-error", "cannot create output directory " + out_dir);

    ScenarioContext ctx;
    ctx.cfg = config;
    ctx.report.config = config;

    switch (config.command) {
        case Command::Solve: run_solve(ctx); break;
        case Command::Spectrum: run_spectrum(ctx); break;
        case Command::Converge: run_converge(ctx); break;
        case Command::Greencheck: run_greencheck(ctx); break;
    }

    write_file(fs::path(out_dir) / ctx.csv_name, ctx.csv.str());

    std::ostringstream summary;
    summary << "# degenbeam run summary\n" << render_config(config);
    for (const std::string& line : ctx.report.summary) summary << line << '\n';
    for (const std::string& line : ctx.report.violations)
        summary << "violation: " << line << '\n';
    summary << "status: " << ctx.report.exit_status << '\n';
    write_file(fs::path(out_dir) / "summary.txt", summary.str());

    return ctx.report;
}

} // namespace degenbeam
