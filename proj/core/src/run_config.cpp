#include "gnwave/run_config.hpp"

#include <cstddef>
#include <fstream>
#include <sstream>

#include "gnwave/error.hpp"

namespace gnwave {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception&) {
        throw error("config: key '" + key + "' expects a number, got '" + v + "'");
    }
    if (used != v.size())
        throw error("config: key '" + key + "' has trailing junk in '" + v + "'");
    return out;
}

int parse_int(const std::string& key, const std::string& v) {
    const double d = parse_double(key, v);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        throw error("config: key '" + key + "' expects an integer, got '" + v + "'");
    return i;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw error("config: key '" + key + "' expects true/false, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    return out;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw, section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw error("config line " + std::to_string(lineno) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "physics" && section != "time" &&
                section != "breaking" && section != "output")
                throw error("config: unknown section '" + section + "'");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        const std::string qual = section + "." + key;

        if (qual == "scenario.name")
            cfg.scenario = val;
        else if (qual == "scenario.amplitude")
            cfg.amplitude = parse_double(key, val);
        else if (qual == "scenario.n_cells")
            cfg.n_cells = parse_int(key, val);
        else if (qual == "physics.g")
            cfg.g = parse_double(key, val);
        else if (qual == "physics.alpha")
            cfg.alpha = parse_double(key, val);
        else if (qual == "physics.f")
            cfg.f = parse_double(key, val);
        else if (qual == "physics.rho")
            cfg.rho = parse_double(key, val);
        else if (qual == "physics.eps_dry")
            cfg.eps_dry = parse_double(key, val);
        else if (qual == "time.t_end")
            cfg.t_end = parse_double(key, val);
        else if (qual == "time.dt")
            cfg.dt = parse_double(key, val);
        else if (qual == "time.cfl")
            cfg.cfl = parse_double(key, val);
        else if (qual == "time.max_dt")
            cfg.max_dt = parse_double(key, val);
        else if (qual == "time.dispersive")
            cfg.dispersive = parse_bool(key, val);
        else if (qual == "breaking.enabled")
            cfg.breaking_enabled = parse_bool(key, val);
        else if (qual == "breaking.theta")
            cfg.breaking_theta = parse_double(key, val);
        else if (qual == "breaking.floor")
            cfg.breaking_floor = parse_double(key, val);
        else if (qual == "breaking.halo")
            cfg.breaking_halo = parse_int(key, val);
        else if (qual == "output.dir")
            cfg.output_dir = val;
        else if (qual == "output.snapshot_interval")
            cfg.snapshot_interval = parse_double(key, val);
        else if (qual == "output.gauges")
            cfg.gauges = parse_list(key, val);
        else
            throw error("config: unknown key '" + key + "' in section '" + section + "'");
    }
    if (cfg.dt && cfg.cfl)
        throw error("config: set time.dt or time.cfl, not both");
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    detail::require(in.good(), "config: cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "[scenario]\nname = " << cfg.scenario << "\n";
    if (cfg.amplitude) out << "amplitude = " << *cfg.amplitude << "\n";
    if (cfg.n_cells) out << "n_cells = " << *cfg.n_cells << "\n";

    out << "[physics]\n";
    if (cfg.g) out << "g = " << *cfg.g << "\n";
    if (cfg.alpha) out << "alpha = " << *cfg.alpha << "\n";
    if (cfg.f) out << "f = " << *cfg.f << "\n";
    if (cfg.rho) out << "rho = " << *cfg.rho << "\n";
    if (cfg.eps_dry) out << "eps_dry = " << *cfg.eps_dry << "\n";

    out << "[time]\n";
    if (cfg.t_end) out << "t_end = " << *cfg.t_end << "\n";
    if (cfg.dt) out << "dt = " << *cfg.dt << "\n";
    if (cfg.cfl) out << "cfl = " << *cfg.cfl << "\n";
    if (cfg.max_dt) out << "max_dt = " << *cfg.max_dt << "\n";
    if (cfg.dispersive) out << "dispersive = " << (*cfg.dispersive ? "true" : "false") << "\n";

    out << "[breaking]\n";
    if (cfg.breaking_enabled)
        out << "enabled = " << (*cfg.breaking_enabled ? "true" : "false") << "\n";
    if (cfg.breaking_theta) out << "theta = " << *cfg.breaking_theta << "\n";
    if (cfg.breaking_floor) out << "floor = " << *cfg.breaking_floor << "\n";
    if (cfg.breaking_halo) out << "halo = " << *cfg.breaking_halo << "\n";

    out << "[output]\ndir = " << cfg.output_dir << "\n";
    out << "snapshot_interval = " << cfg.snapshot_interval << "\n";
    if (cfg.gauges) {
        out << "gauges =";
        for (std::size_t i = 0; i < cfg.gauges->size(); ++i)
            out << (i ? ", " : " ") << (*cfg.gauges)[i];
        out << "\n";
    }
    return out.str();
}

Scenario configured_scenario(const RunConfig& cfg) {
    const std::string& n = cfg.scenario;
    const auto amp = [&](double preset) { return cfg.amplitude.value_or(preset); };

    Scenario sc = [&] {
        if (n == "solitary-small") return solitary_scenario(amp(0.05), cfg.n_cells.value_or(240));
        if (n == "solitary-large") return solitary_scenario(amp(0.2), cfg.n_cells.value_or(240));
        if (n == "wall-low") return wall_reflection_scenario(amp(0.1));
        if (n == "wall-high") return wall_reflection_scenario(amp(0.174));
        if (n.rfind("shoaling-", 0) == 0)
            return shoaling_scenario(amp(parse_double("amplitude", n.substr(9))));
        if (n == "synolakis") return synolakis_scenario(amp(0.28), cfg.f.value_or(0.002));
        if (n == "periodic-wave")
            return periodic_wave_scenario(amp(0.01), cfg.alpha.value_or(1.159));
        throw error("unknown scenario '" + n + "'");
    }();

    if (cfg.g) sc.phys.g = *cfg.g;
    if (cfg.alpha) sc.phys.alpha = *cfg.alpha;
    if (cfg.f) sc.phys.f = *cfg.f;
    if (cfg.rho) sc.phys.rho = *cfg.rho;
    if (cfg.eps_dry) sc.phys.eps_dry = *cfg.eps_dry;

    if (cfg.t_end) sc.control.t_end = *cfg.t_end;
    if (cfg.dt) sc.control.fixed_dt = *cfg.dt;
    if (cfg.cfl) {
        sc.control.fixed_dt = 0.0;
        sc.control.cfl = *cfg.cfl;
    }
    if (cfg.max_dt) sc.control.max_dt = *cfg.max_dt;
    if (cfg.dispersive) sc.control.dispersive = *cfg.dispersive;

    if (cfg.breaking_enabled) sc.control.breaking.enabled = *cfg.breaking_enabled;
    if (cfg.breaking_theta) sc.control.breaking.theta = *cfg.breaking_theta;
    if (cfg.breaking_floor) sc.control.breaking.floor = *cfg.breaking_floor;
    if (cfg.breaking_halo) sc.control.breaking.halo = *cfg.breaking_halo;

    if (cfg.gauges) sc.gauges = *cfg.gauges;

    sc.phys.validate();
    sc.control.validate();
    sc.control.breaking.validate();
    return sc;
}

} // namespace gnwave
