#pragma once

#include <vector>

namespace gnwave {

double linf_norm(const std::vector<double>& v);

/// max_i |num_i - ref_i| / max_i |normalizer_i|. Errors on size mismatch or a
/// zero normalizer (callers pick a meaningful floor for degenerate cases).
double linf_rel_error(const std::vector<double>& num, const std::vector<double>& ref,
                      const std::vector<double>& normalizer);

} // namespace gnwave
