// Command-line front end: run / converge / dispersion / alpha.
//
// Exit codes: 0 success, 1 bad usage or configuration, 2 numerical abort.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gnwave/convergence.hpp"
#include "gnwave/dispersion.hpp"
#include "gnwave/io.hpp"
#include "gnwave/run_config.hpp"
#include "gnwave/scenarios.hpp"
#include "gnwave/stepper.hpp"

namespace {

using namespace gnwave;

void cmd_run(const std::string& config_path) {
    const RunConfig cfg = load_config(config_path);
    const Scenario sc = configured_scenario(cfg);
    const std::string outdir = resolve_output_dir(cfg.output_dir);

    std::vector<GaugeSample> gsamples;
    BreakingMask last_mask;
    const double tiny = 1e-9 * std::max(1.0, sc.control.t_end);
    double next_snap = 0.0;

    StepObserver obs = [&](int, double t, const CellState& s, const BreakingMask& m) {
        last_mask = m;
        for (std::size_t gi = 0; gi < sc.gauges.size(); ++gi)
            gsamples.push_back(
                sample_gauge(sc.grid, sc.bathy, s, sc.phys, t, (int)gi, sc.gauges[gi]));
        if (cfg.snapshot_interval > 0.0 && t + tiny >= next_snap) {
            write_snapshot(outdir, t, sc.grid, sc.bathy, s, m.cell, sc.phys);
            while (next_snap <= t + tiny) next_snap += cfg.snapshot_interval;
        }
    };

    const RunResult res =
        run_simulation(sc.initial, sc.bathy, sc.bc, sc.phys, sc.control, obs);

    write_snapshot(outdir, res.t, sc.grid, sc.bathy, res.state, last_mask.cell, sc.phys);
    write_gauges(outdir, gsamples);
    write_summary(outdir, res.series);

    std::printf("%s: %d steps to t = %s, output in %s\n", sc.name.c_str(), res.n_steps,
                format_full(res.t).c_str(), outdir.c_str());
}

void cmd_converge(const std::string& config_path, int levels) {
    const RunConfig cfg = load_config(config_path);
    if (cfg.scenario.rfind("solitary", 0) != 0)
        throw error("converge: the study propagates the closed-form solitary wave; "
                    "use scenario solitary-small or solitary-large");
    const double a_over_h0 =
        cfg.amplitude.value_or(cfg.scenario == "solitary-large" ? 0.2 : 0.05);
    const double dx0 = cfg.n_cells ? 30.0 / *cfg.n_cells : 1.0;
    const double t_end = cfg.t_end.value_or(3.0);

    const ConvergenceResult res = convergence_study(a_over_h0, levels, dx0, t_end);

    std::string table = "dx,dt,err_zeta,err_u\n";
    for (const auto& lv : res.levels)
        table += format_full(lv.dx) + ',' + format_full(lv.dt) + ',' +
                 format_full(lv.err_zeta) + ',' + format_full(lv.err_u) + '\n';
    std::fputs(table.c_str(), stdout);
    std::printf("# slope_zeta = %s\n# slope_u = %s\n", format_full(res.slope_zeta).c_str(),
                format_full(res.slope_u).c_str());

    const std::string outdir = resolve_output_dir(cfg.output_dir);
    std::filesystem::create_directories(outdir);
    std::ofstream file(std::filesystem::path(outdir) / "convergence.csv", std::ios::trunc);
    if (!file) throw error("converge: cannot write convergence.csv");
    file << table;
}

void cmd_dispersion(double alpha, double dt, double khmax, int samples) {
    detail::require(samples >= 2, "dispersion: need at least 2 samples");
    detail::require(khmax > 0.0, "dispersion: khmax must be positive");
    std::printf("kh0,phase_ratio,group_ratio\n");
    for (int i = 1; i <= samples; ++i) {
        const double kh0 = khmax * i / samples;
        DispersionQuery q;
        q.kh0 = kh0;
        q.h0 = 1.0;
        q.g = 1.0;
        q.alpha = alpha;
        q.dt = dt;
        q.validate();
        const StokesReference ref = stokes_reference(kh0, 1.0, 1.0);
        std::printf("%s,%s,%s\n", format_full(kh0).c_str(),
                    format_full(phase_velocity_semidiscrete(q) / ref.phase).c_str(),
                    format_full(group_velocity_semidiscrete(q) / ref.group).c_str());
    }
}

void cmd_alpha(const std::string& mode, double kh0, double dt, const std::string& components) {
    double alpha = 0.0;
    if (mode == "global") {
        AlphaObjective obj;
        if (components == "phase+group")
            obj.components = VelocityComponents::phase_and_group;
        else if (components != "phase")
            throw error("alpha: components must be phase or phase+group");
        alpha = optimize_alpha(obj, dt);
    } else if (mode == "local") {
        alpha = optimize_alpha_local(kh0, dt, 1.0, 1.0);
    } else {
        throw error("alpha: mode must be global or local");
    }
    std::printf("%s\n", format_full(alpha).c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D dispersive shallow-water solver"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run a configured scenario and write CSV output");
    run->add_option("config", config_path, "configuration file")
        ->required()
        ->check(CLI::ExistingFile);

    int levels = 4;
    auto* conv = app.add_subcommand("converge", "Grid-refinement error study on the solitary wave");
    conv->add_option("config", config_path, "configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    conv->add_option("--levels", levels, "number of refinement levels")
        ->check(CLI::Range(2, 12));

    double alpha = 1.159, dt = 0.0, khmax = 4.0, kh0 = 3.14159265358979324;
    int samples = 400;
    auto* disp = app.add_subcommand(
        "dispersion", "Phase/group velocity against the reference relation (g = h0 = 1 units)");
    disp->add_option("--alpha", alpha, "lens parameter")->check(CLI::Range(1.0, 10.0));
    disp->add_option("--dt", dt, "dimensionless step dt*sqrt(g/h0)")
        ->check(CLI::NonNegativeNumber);
    disp->add_option("--khmax", khmax, "upper end of the kh0 range");
    disp->add_option("--samples", samples, "table rows");

    std::string mode = "global", components = "phase";
    auto* alph = app.add_subcommand("alpha", "Optimize the lens parameter (g = h0 = 1 units)");
    alph->add_option("--mode", mode, "global or local");
    alph->add_option("--kh0", kh0, "wavenumber for local mode");
    alph->add_option("--dt", dt, "dimensionless step dt*sqrt(g/h0)")
        ->check(CLI::NonNegativeNumber);
    alph->add_option("--components", components, "phase or phase+group (global mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) cmd_run(config_path);
        if (conv->parsed()) cmd_converge(config_path, levels);
        if (disp->parsed()) cmd_dispersion(alpha, dt, khmax, samples);
        if (alph->parsed()) cmd_alpha(mode, kh0, dt, components);
    } catch (const gnwave::numerical_error& e) {
        std::cerr << "numerical abort: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
