#pragma once

#include "fairdiv/oracle.hpp"
#include "fairdiv/solvers.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace fairdiv {

enum class Algorithm { Ef2x, EfxCharity, EfxPlus };

/// The verifier battery for one solver run: structural soundness plus the
/// solver's advertised guarantees. Returns the first failure found.
std::optional<std::string> verify_solver_result(const Instance& inst, Algorithm algorithm,
                                                const Allocation& alloc);

struct FuzzParams {
    Algorithm algorithm = Algorithm::Ef2x;
    int count = 100;
    std::uint64_t seed_base = 0;
    FuzzShape shape{};
    int jobs = 1;
    SolveOptions solve{};
    /// Directory for the reproducer written on the first failure; empty
    /// disables writing.
    std::string reproducer_dir = ".";
};

struct FuzzReport {
    int total = 0, passed = 0, failed = 0, internal_errors = 0;
    std::map<std::size_t, int> pool_left_histogram;
    std::size_t max_rule_steps = 0;
    std::optional<std::uint64_t> first_failure_seed;
    std::string first_failure_message;
    std::string reproducer_path;

    /// 0 all passed, 1 verification failures, 3 internal invariant hits.
    int exit_code() const { return internal_errors ? 3 : (failed ? 1 : 0); }
};

/// Runs `count` seeded instances through the algorithm and its verifier
/// battery. Internal errors are recorded and the campaign continues.
/// Deterministic for fixed parameters regardless of `jobs`.
FuzzReport run_fuzz(const FuzzParams& params);

} // namespace fairdiv
