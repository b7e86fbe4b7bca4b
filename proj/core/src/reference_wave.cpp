#include "gnwave/reference_wave.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gnwave/conversions.hpp"
#include "gnwave/error.hpp"

namespace gnwave {

namespace {

void parse_header_tokens(const std::string& line, ReferenceWave& w) {
    std::istringstream in(line.substr(1));
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const double val = std::stod(tok.substr(eq + 1));
        if (key == "T")
            w.period = val;
        else if (key == "c")
            w.celerity = val;
        else if (key == "h0")
            w.h0 = val;
        else
            throw error("reference wave: unknown header key '" + key + "'");
    }
}

} // namespace

ReferenceWave load_reference_wave(const std::string& path) {
    std::ifstream in(path);
    detail::require(in.good(), "reference wave: cannot open '" + path + "'");

    ReferenceWave w;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            parse_header_tokens(line, w);
            continue;
        }
        std::istringstream row(line);
        double x, h, u;
        char c1, c2;
        if (!(row >> x >> c1 >> h >> c2 >> u) || c1 != ',' || c2 != ',')
            throw error("reference wave: malformed row '" + line + "'");
        w.x.push_back(x);
        w.h.push_back(h);
        w.u.push_back(u);
    }

    detail::require(w.period > 0.0, "reference wave: header must set T > 0");
    detail::require(w.celerity > 0.0, "reference wave: header must set c > 0");
    detail::require(w.h0 > 0.0, "reference wave: header must set h0 > 0");
    detail::require(w.x.size() >= 6, "reference wave: need at least 6 samples");
    for (std::size_t i = 1; i < w.x.size(); ++i)
        detail::require(w.x[i] > w.x[i - 1], "reference wave: x must be strictly increasing");

    const double scale = *std::max_element(w.h.begin(), w.h.end());
    detail::require(std::abs(w.h.front() - w.h.back()) <= 1e-8 * scale &&
                        std::abs(w.u.front() - w.u.back()) <= 1e-8 * (1.0 + scale),
                    "reference wave: endpoints do not match (profile must close the period)");
    return w;
}

double sample_reference(const ReferenceWave& w, const std::vector<double>& field, double xq) {
    detail::require(field.size() == w.x.size(), "reference wave: field size mismatch");
    const int m = static_cast<int>(w.x.size()) - 1; // unique points
    const double L = w.wavelength();

    double xw = std::fmod(xq - w.x.front(), L);
    if (xw < 0.0) xw += L;
    xw += w.x.front();

    // Nearest source index, then 5 points centered on it (wrapped).
    const auto it = std::upper_bound(w.x.begin(), w.x.end(), xw);
    int ic = static_cast<int>(it - w.x.begin()) - 1;
    if (ic + 1 <= m && w.x[ic + 1] - xw < xw - w.x[ic]) ++ic;

    double num = 0.0;
    double xs[5], fs[5];
    for (int s = 0; s < 5; ++s) {
        int j = ic - 2 + s;
        double shift = 0.0;
        while (j < 0) {
            j += m;
            shift -= L;
        }
        while (j >= m) {
            j -= m;
            shift += L;
        }
        xs[s] = w.x[j] + shift;
        fs[s] = field[j];
    }
    for (int s = 0; s < 5; ++s) {
        double term = fs[s];
        for (int r = 0; r < 5; ++r)
            if (r != s) term *= (xw - xs[r]) / (xs[s] - xs[r]);
        num += term;
    }
    return num;
}

CellState reference_initial_state(const ReferenceWave& w, const Grid& grid, BcPair bc) {
    std::vector<double> hn(grid.n_nodes()), qn(grid.n_nodes());
    for (int i = 0; i < grid.n_nodes(); ++i) {
        const double x = grid.node(i);
        hn[i] = sample_reference(w, w.h, x);
        qn[i] = hn[i] * sample_reference(w, w.u, x);
    }
    CellState s;
    s.h = node_to_cell(hn, bc, Parity::even);
    s.q = node_to_cell(qn, bc, Parity::odd);
    return s;
}

} // namespace gnwave
