#include "gnwave/norms.hpp"

#include <cmath>

#include "gnwave/error.hpp"

namespace gnwave {

double linf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double linf_rel_error(const std::vector<double>& num, const std::vector<double>& ref,
                      const std::vector<double>& normalizer) {
    detail::require(num.size() == ref.size(), "linf_rel_error: size mismatch");
    const double denom = linf_norm(normalizer);
    detail::require(denom > 0.0, "linf_rel_error: zero normalizer");
    double m = 0.0;
    for (std::size_t i = 0; i < num.size(); ++i) m = std::max(m, std::abs(num[i] - ref[i]));
    return m / denom;
}

} // namespace gnwave
