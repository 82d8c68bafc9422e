#pragma once

#include "fairdiv/config.hpp"

namespace fairdiv {

/// Moves every good an agent holds without valuing it back to the pool.
/// Values are unchanged; the result is non-wasteful and idempotent.
Allocation remove_wasted(const Instance& inst, Allocation alloc);

/// Rebuilds a valid configuration from an arbitrary partial allocation:
/// strips wasted goods, then repeatedly seeds a group with the globally
/// poorest unassigned agent and pulls in every agent whose bundle some
/// group member values above the seed's value, shrinking the pulled
/// bundle to the member's minimal envied subset. Surplus goods return to
/// the pool. The output satisfies p1, p2 and p3; no agent's value ever
/// increases and no bundle ever grows.
Configuration envy_eliminate(const Instance& inst, Allocation alloc);

} // namespace fairdiv
