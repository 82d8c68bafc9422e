#pragma once

#include "fairdiv/rules.hpp"

namespace fairdiv {

struct SolveOptions {
    /// Upper bound on rule firings per solve. The theory guarantees
    /// termination well below this; hitting the cap raises InternalError
    /// rather than stopping silently. Overridable via FAIRDIV_STEP_CAP in
    /// the command-line tool.
    std::size_t step_cap = 100'000;
    /// Node-expansion budget of the champion cycle search.
    std::uint64_t cycle_expansion_cap = 1'000'000;
};

struct SolveResult {
    Allocation allocation;
    std::vector<RuleTrace> trace;
    /// For the complete allocator: the configuration when the rule loop
    /// stopped, before the completion phase. For the charity allocator:
    /// the terminal configuration.
    Configuration final_config;
};

/// Complete allocation (empty pool) that is EF2X: runs U0, U1, U2, U3 to
/// quiescence (smallest applicable rule first), then distributes the
/// remaining pool, farthest group members first, one good each.
SolveResult solve_ef2x(const Instance& inst, const SolveOptions& opts = {});

/// EFX allocation that may leave goods unallocated: runs U0, U1, U2, U4.
/// At termination fewer than floor(n/2) goods remain pooled and nobody
/// values the pool above its own bundle.
SolveResult solve_efx_charity(const Instance& inst, const SolveOptions& opts = {});

/// Greedy one-pass allocator: goods in decreasing inherent value, each to
/// the interested agent currently poorest. EFX restricted to valued
/// removals, non-wasteful, and welfare-maximal hence Pareto optimal.
/// Goods nobody wants stay pooled, or go to agent 0 when
/// `complete_dump` is set (their value to agent 0 is zero either way).
Allocation solve_efx_plus(const Instance& inst, bool complete_dump = false);

} // namespace fairdiv
