#pragma once

#include <stdexcept>
#include <string>

namespace gnwave {

/// Invalid input: bad configuration, inconsistent sizes, contract violations.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The solver state became non-physical (NaN, runaway velocities, ...).
/// Maps to a distinct process exit code in the CLI.
struct numerical_error : error {
    using error::error;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

} // namespace detail
} // namespace gnwave
