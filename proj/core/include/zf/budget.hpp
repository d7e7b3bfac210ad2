#pragma once

#include <cstdint>

#include "zf/rational.hpp"

namespace zf {

/// Enumeration budgets. The default caps full coloring enumerations at
/// K^n <= 2^24 states; ZF_BUDGET overrides it, ZF_THREADS sets worker count.
/// These are the only environment-controlled knobs.
struct Budget {
    std::int64_t max_states = default_states();

    static std::int64_t default_states();

    /// Throws BudgetError unless K^n <= max_states.
    void check_colorings(int K, int n, const char* what) const;
};

/// Worker count for parallel sweeps (ZF_THREADS, default: hardware, capped).
int thread_count();

}  // namespace zf
