#pragma once

#include "fairdiv/allocation.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace fairdiv {

/// Streams every assignment of goods to agents (digit < n) and, when
/// allow_pool is set, to the pool (digit == n), in lexicographic order of
/// the per-good digit string with the last good varying fastest. The
/// first allocation hands everything to agent 0. Construction refuses
/// instances with more than `cap` assignments.
class AllocationEnumerator {
public:
    AllocationEnumerator(const Instance& inst, bool allow_pool, std::uint64_t cap = 2'000'000);

    std::optional<Allocation> next();

private:
    const Instance& inst_;
    int base_;
    std::vector<int> digits_;
    bool done_ = false;
};

/// First enumerated allocation satisfying the predicate, or nullopt.
std::optional<Allocation> exists_allocation(const Instance& inst,
                                            const std::function<bool(const Allocation&)>& pred,
                                            bool allow_pool = false,
                                            std::uint64_t cap = 2'000'000);

/// Two agents, 2k+1 goods: one shared good "g" worth ((1+c)/c)^k, and k
/// private goods per agent worth ((1+c)/c)^(i-1) each. No complete
/// allocation of it is both Pareto optimal and c-EFkX. Requires k >= 1
/// and 0 < c <= 1.
Instance counterexample_instance(int k, const Value& c);

struct ValueLaw {
    long long lo = 1, hi = 10; ///< uniform integers, inclusive
};

/// Deterministic: one mt19937_64 stream per seed, values drawn first then
/// the interest matrix row by row. Identical across platforms since no
/// library distribution objects are involved.
Instance random_instance(std::uint64_t seed, int n, int m, const ValueLaw& law = {},
                         double interest_prob = 0.6);

struct FuzzShape {
    int n_min = 2, n_max = 6;
    int m_min = 1, m_max = 10;
    ValueLaw law{};
    double interest_prob = 0.6;
};

/// One campaign instance per seed: derives (n, m) from the seed, then
/// delegates to random_instance with the same seed.
Instance fuzz_instance(std::uint64_t seed, const FuzzShape& shape = {});

} // namespace fairdiv
