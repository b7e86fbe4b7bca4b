#include "gnwave/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gnwave/error.hpp"

namespace gnwave {

std::string resolve_output_dir(const std::string& configured) {
    const char* env = std::getenv("GNWAVE_OUTPUT_DIR");
    if (env != nullptr && env[0] != '\0') return env;
    return configured;
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_csv(const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

void write_snapshot(const std::string& dir, double t, const Grid& grid,
                    const Bathymetry& bathy, const CellState& state,
                    const std::vector<char>& cell_mask, const Physics& phys) {
    const int n = grid.n_cells;
    if ((int)state.h.size() != n || (int)bathy.cell.size() != n)
        throw error("write_snapshot: size mismatch");

    char name[64];
    std::snprintf(name, sizeof name, "t=%.6f.csv", t);
    auto out = open_csv(std::filesystem::path(dir) / "snapshots" / name);

    out << "x,b,h,u,zeta,breaking_flag\n";
    for (int j = 0; j < n; ++j) {
        const double h = state.h[j];
        const double u = velocity(h, state.q[j], phys.eps_dry);
        const double zeta = h + bathy.cell[j] - bathy.h0;
        const int flag = (!cell_mask.empty() && cell_mask[j]) ? 1 : 0;
        out << format_full(grid.center(j)) << ',' << format_full(bathy.cell[j])
            << ',' << format_full(h) << ',' << format_full(u) << ','
            << format_full(zeta) << ',' << flag << '\n';
    }
    if (!out) throw error("write_snapshot: write failed");
}

double sample_linear(const Grid& grid, const std::vector<double>& cell_values,
                     double x) {
    const int n = grid.n_cells;
    if ((int)cell_values.size() != n) throw error("sample_linear: size mismatch");

    auto node_value = [&](int i) {
        if (i <= 0) return cell_values[0];
        if (i >= n) return cell_values[n - 1];
        return 0.5 * (cell_values[i - 1] + cell_values[i]);
    };

    const double xl = grid.x0;
    const double xr = grid.x0 + grid.length();
    x = std::clamp(x, xl, xr);
    int i = (int)((x - xl) / grid.dx);
    i = std::clamp(i, 0, n - 1);
    const double s = (x - grid.node(i)) / grid.dx;
    return (1.0 - s) * node_value(i) + s * node_value(i + 1);
}

GaugeSample sample_gauge(const Grid& grid, const Bathymetry& bathy,
                         const CellState& state, const Physics& phys,
                         double t, int gauge_id, double x) {
    GaugeSample g;
    g.t = t;
    g.gauge_id = gauge_id;
    g.h = sample_linear(grid, state.h, x);
    const double q = sample_linear(grid, state.q, x);
    g.u = velocity(g.h, q, phys.eps_dry);
    std::vector<double> zeta(grid.n_cells);
    for (int j = 0; j < grid.n_cells; ++j)
        zeta[j] = state.h[j] + bathy.cell[j] - bathy.h0;
    g.zeta = sample_linear(grid, zeta, x);
    return g;
}

void write_gauges(const std::string& dir, const std::vector<GaugeSample>& samples) {
    auto out = open_csv(std::filesystem::path(dir) / "gauges.csv");
    out << "t,gauge_id,h,u,zeta\n";
    for (const auto& g : samples) {
        out << format_full(g.t) << ',' << g.gauge_id << ',' << format_full(g.h)
            << ',' << format_full(g.u) << ',' << format_full(g.zeta) << '\n';
    }
    if (!out) throw error("write_gauges: write failed");
}

void write_summary(const std::string& dir, const std::vector<StepRecord>& series) {
    auto out = open_csv(std::filesystem::path(dir) / "summary.csv");
    out << "t,mass,momentum,energy,flagged_cells\n";
    for (const auto& r : series) {
        out << format_full(r.t) << ',' << format_full(r.mass) << ','
            << format_full(r.momentum) << ',' << format_full(r.energy) << ','
            << r.flagged_cells << '\n';
    }
    if (!out) throw error("write_summary: write failed");
}

}  // namespace gnwave
