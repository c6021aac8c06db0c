#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

#include "bratteli/errors.hpp"

namespace bratteli {

/// Resource limits threaded through deep product scans.
/// `entry_bits`: per-entry bit-size cap for exact products (default 1 Mbit).
/// `deadline`: optional wall-clock cutoff.
struct Budget {
    std::size_t entry_bits = std::size_t{1} << 20;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void check_time() const {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            raise(ErrorKind::TimeBudgetExceeded, "wall-clock budget exhausted");
    }

    bool entry_fits(std::size_t bits) const { return bits <= entry_bits; }
};

}  // namespace bratteli
