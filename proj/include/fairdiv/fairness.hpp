#pragma once

#include "fairdiv/allocation.hpp"

#include <optional>
#include <utility>

namespace fairdiv {

/// Certificate of a fairness failure. `removed` is the worst-case removal
/// subset of the envied bundle that still leaves the envier behind, and
/// lhs < rhs holds exactly: lhs is the envier's own value, rhs the value
/// the envier assigns to the residual envied bundle (scaled by c for the
/// approximate check).
struct Violation {
    int envier = -1;
    int envied = -1;
    GoodSet removed;
    Value lhs;
    Value rhs;
};

/// nullopt means the property holds. Violations report the
/// lexicographically first failing ordered pair (envier, envied).
using CheckResult = std::optional<Violation>;

/// EFkX: for every ordered pair i != j, removing ANY min(k, |X_j|)
/// distinct goods from X_j leaves v_i(X_i) >= v_i(X_j minus removed).
/// Only the worst-case removal (the min(k,|X_j|) goods i values least,
/// ties by good index) needs checking. k = 1 is EFX.
CheckResult check_efkx(const Instance& inst, const Allocation& alloc, int k);

/// Multiplicative relaxation: v_i(X_i) >= c * v_i(X_j minus removed) for
/// every removal as above. Requires 0 < c <= 1.
CheckResult check_c_efkx(const Instance& inst, const Allocation& alloc, int k, const Value& c);

/// EFX restricted to removals the envier actually values: for every pair
/// i != j and every g in X_j with v_i(g) > 0, v_i(X_i) >= v_i(X_j) - v_i(g).
CheckResult check_efx_plus(const Instance& inst, const Allocation& alloc);

/// Envy-freeness (no removal allowed) and EF1 (the single most valuable
/// removal allowed), built from the same primitives.
CheckResult check_ef(const Instance& inst, const Allocation& alloc);
CheckResult check_ef1(const Instance& inst, const Allocation& alloc);

/// Pairs (agent, good) where a non-exempt agent holds a good it does not
/// value, ordered by agent then good. Empty means non-wasteful.
std::vector<std::pair<int, int>> check_nonwasteful(const Instance& inst, const Allocation& alloc,
                                                   const std::set<int>& exempt = {});

/// Brute-force Pareto check: enumerates every complete allocation and
/// returns the first one that weakly dominates `alloc` with at least one
/// strict improvement, or nullopt if none exists. Refuses instances with
/// more than `cap` complete allocations.
std::optional<Allocation> check_pareto_bruteforce(const Instance& inst, const Allocation& alloc,
                                                  std::uint64_t cap = 2'000'000);

/// True when removing some single good from X_j still leaves i envious:
/// exists g in X_j with v_i(X_j minus g) > v_i(X_i). EFX holds exactly
/// when no ordered pair strongly envies.
bool strongly_envies(const Instance& inst, const Allocation& alloc, int i, int j);

} // namespace fairdiv
