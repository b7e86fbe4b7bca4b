#include "gnwave/state.hpp"

#include "gnwave/error.hpp"

namespace gnwave {

std::vector<double> axpy(const std::vector<double>& y, double a, const std::vector<double>& k) {
    detail::require(y.size() == k.size(), "axpy: size mismatch");
    std::vector<double> r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = y[i] + a * k[i];
    return r;
}

CellState axpy(const CellState& y, double a, const CellState& k) {
    return {axpy(y.h, a, k.h), axpy(y.q, a, k.q)};
}

} // namespace gnwave
