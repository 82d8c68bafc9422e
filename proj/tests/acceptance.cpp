#include "fairdiv/campaign.hpp"
#include "fairdiv/elim.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/rules.hpp"
#include "fairdiv/solvers.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace fairdiv;

namespace {

constexpr int kCampaignSize = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 4u));
}

struct TraceStats {
    std::size_t firings = 0;
    std::size_t monotonicity_offences = 0;
    std::size_t chain_offences = 0;
    std::size_t serialized_failures = 0;
};

/// Folds one solve's trace into the campaign-wide potential statistics,
/// both in memory and after a serialization round trip.
void absorb_trace(const Instance& inst, const SolveResult& result, TraceStats& stats) {
    const RuleTrace* prev = nullptr;
    for (const RuleTrace& t : result.trace) {
        if (t.rule == RuleId::Phase) continue;
        ++stats.firings;
        if (phi_compare(t.phi_after, t.phi_before) != Ordering::Greater)
            ++stats.monotonicity_offences;
        if (prev && !(prev->phi_after == t.phi_before)) ++stats.chain_offences;
        prev = &t;
    }
    if (!validate_trace_json(trace_to_json(inst, result.trace)).ok) ++stats.serialized_failures;
}

/// Reference EFkX check by brute force: every removal subset of the exact
/// required size is enumerated, not just the cheapest one.
bool naive_efkx_holds(const Instance& inst, const Allocation& alloc, int k) {
    const int n = inst.agents();
    for (int i = 0; i < n; ++i) {
        const Value own = bundle_value(inst, i, alloc.bundles[i]);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const std::vector<int> goods(alloc.bundles[j].begin(), alloc.bundles[j].end());
            const int l = std::min<int>(k, static_cast<int>(goods.size()));

            std::vector<int> pick(l);
            std::function<bool(int, int)> any_violation = [&](int depth, int first) {
                if (depth == l) {
                    Value rest;
                    for (std::size_t t = 0; t < goods.size(); ++t) {
                        if (std::find(pick.begin(), pick.end(), static_cast<int>(t)) !=
                            pick.end())
                            continue;
                        rest += inst.agent_value(i, goods[t]);
                    }
                    return own < rest;
                }
                for (int t = first; t < static_cast<int>(goods.size()); ++t) {
                    pick[depth] = t;
                    if (any_violation(depth + 1, t + 1)) return true;
                }
                return false;
            };
            if (any_violation(0, 0)) return false;
        }
    }
    return true;
}

struct Reporter {
    bool all_pass = true;

    void run(int index, const std::string& label, const std::function<std::string()>& body) {
        std::string detail;
        try {
            detail = body();
        } catch (const std::exception& e) {
            detail = std::string("unexpected exception: ") + e.what();
        }
        const bool ok = detail.empty() || detail.front() == '+';
        all_pass = all_pass && ok;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << label;
        if (!detail.empty()) std::cout << " (" << (ok ? detail.substr(1) : detail) << ")";
        std::cout << std::endl;
    }
};

/// Pass with a note rather than a bare pass.
std::string note(const std::string& text) { return "+" + text; }

/// True when some agent outside group l champions the group's
/// representative bundle grown by pool good g.
bool has_outside_champion(const Configuration& config, const ChampionGraph& graph, int l, int g) {
    return std::any_of(graph.champion_edges.begin(), graph.champion_edges.end(),
                       [&](const ChampionGraph::ChampionEdge& e) {
                           return e.to == config.reps[l] && e.good == g &&
                                  config.group_of[e.from] != l;
                       });
}

} // namespace

int main() {
    Reporter reporter;

    // Criteria 1, 2, 6 and 7 all consume the same two 1000-seed
    // campaigns, so those run first and the criteria report afterwards.
    TraceStats stats;
    int ef2x_failures = 0;
    int exit_bound_failures = 0;
    int exits_tested = 0;
    int champion_gaps = 0;
    std::string ef2x_detail;
    const auto ef2x_start = Clock::now();
    for (std::uint64_t seed = 0; seed < kCampaignSize; ++seed) {
        try {
            const Instance inst = fuzz_instance(seed, {});
            const SolveResult result = solve_ef2x(inst);
            if (auto failure = verify_solver_result(inst, Algorithm::Ef2x, result.allocation)) {
                ++ef2x_failures;
                if (ef2x_detail.empty())
                    ef2x_detail = "seed " + std::to_string(seed) + ": " + *failure;
            }
            absorb_trace(inst, result, stats);

            // Rule quiescence must leave fewer pooled goods than groups.
            const Configuration& exit_config = result.final_config;
            if (exit_config.alloc.pool.size() >=
                static_cast<std::size_t>(exit_config.group_count()))
                ++exit_bound_failures;

            // Exhaustive champion testing on the first hundred exit
            // states; exits almost always drain the pool, so this mostly
            // certifies emptiness and the frozen replays below carry the
            // non-vacuous load.
            if (seed < 100) {
                ++exits_tested;
                const ChampionGraph graph = build_champion_graph(inst, exit_config);
                for (int l = 0; l < exit_config.group_count(); ++l)
                    for (int g : exit_config.alloc.pool)
                        if (!has_outside_champion(exit_config, graph, l, g)) ++champion_gaps;
            }
        } catch (const std::exception& e) {
            ++ef2x_failures;
            if (ef2x_detail.empty())
                ef2x_detail = "seed " + std::to_string(seed) + " threw: " + e.what();
        }
    }
    const double ef2x_elapsed = seconds_since(ef2x_start);

    int charity_failures = 0;
    int small_n_leftovers = 0;
    std::string charity_detail;
    const auto charity_start = Clock::now();
    for (std::uint64_t seed = 0; seed < kCampaignSize; ++seed) {
        try {
            const Instance inst = fuzz_instance(seed, {});
            const SolveResult result = solve_efx_charity(inst);
            if (auto failure =
                    verify_solver_result(inst, Algorithm::EfxCharity, result.allocation)) {
                ++charity_failures;
                if (charity_detail.empty())
                    charity_detail = "seed " + std::to_string(seed) + ": " + *failure;
            }
            if (inst.agents() <= 3 && !result.allocation.pool.empty()) ++small_n_leftovers;
            absorb_trace(inst, result, stats);
        } catch (const std::exception& e) {
            ++charity_failures;
            if (charity_detail.empty())
                charity_detail = "seed " + std::to_string(seed) + " threw: " + e.what();
        }
    }
    const double charity_elapsed = seconds_since(charity_start);

    // The structural facts behind phase one concern states where neither
    // the tolerated handout nor a cycle rotation applies: there the pool
    // must stay below the group count and every pooled good must be
    // championed on top of every representative bundle by an outsider.
    // Random solves drain the pool through those two rules alone, so the
    // states worth testing are rare; these generator settings are the
    // ones known to reach them. The rule loop is replayed with the rule
    // finders exposed and the facts checked whenever goods stay pooled.
    struct PooledProbe {
        FuzzShape shape;
        std::uint64_t seed;
    };
    const FuzzShape wide_vals{3, 6, 3, 9, {1, 1000}, 0.5};
    const FuzzShape wider_law{3, 6, 6, 12, {1, 100000}, 0.5};
    const FuzzShape wide_dense{3, 6, 8, 14, {1, 1000}, 0.7};
    const FuzzShape wide_small_n{2, 4, 8, 14, {1, 100000}, 0.6};
    const FuzzShape wide_big_n{5, 8, 8, 14, {1, 100000}, 0.5};
    const PooledProbe probes[] = {
        {wide_vals, 652},    {wide_vals, 1281},   {wider_law, 857},    {wider_law, 1001},
        {wider_law, 1636},   {wide_dense, 221},   {wide_dense, 1315},  {wide_dense, 1369},
        {wide_dense, 1603},  {wide_small_n, 122}, {wide_small_n, 547}, {wide_small_n, 1669},
        {wide_big_n, 31},    {wide_big_n, 814},   {wide_big_n, 868},   {wide_big_n, 898},
        {wide_big_n, 1003},  {wide_big_n, 1022},  {wide_big_n, 1727},  {wide_big_n, 1962},
    };
    int pooled_states = 0;
    int pooled_bound_breaks = 0;
    std::string pooled_detail;
    for (const PooledProbe& probe : probes) {
        const Instance inst = fuzz_instance(probe.seed, probe.shape);
        Configuration config = envy_eliminate(inst, Allocation::empty_of(inst));
        for (int step = 0; step < 100000; ++step) {
            if (auto w = u0_find(inst, config)) {
                config = u0_apply(inst, config, *w).first;
                continue;
            }
            const ChampionGraph graph = build_champion_graph(inst, config);
            if (auto w = u1_find_cycle(inst, config, graph)) {
                config = u1_apply(inst, config, *w).first;
                continue;
            }

            if (!config.alloc.pool.empty()) {
                ++pooled_states;
                if (config.alloc.pool.size() >= static_cast<std::size_t>(config.group_count()))
                    ++pooled_bound_breaks;
                for (int l = 0; l < config.group_count(); ++l)
                    for (int g : config.alloc.pool)
                        if (!has_outside_champion(config, graph, l, g)) {
                            ++champion_gaps;
                            if (pooled_detail.empty())
                                pooled_detail = "seed " + std::to_string(probe.seed) +
                                               ": no outside champion for " + inst.good_id(g) +
                                               " over group " + std::to_string(l);
                        }
            }

            if (auto w = u2_find(inst, config)) {
                config = u2_apply(inst, config, *w).first;
                continue;
            }
            if (auto w = u3_find(inst, config, graph)) {
                config = u3_apply(inst, config, *w).first;
                continue;
            }
            break;
        }
    }

    reporter.run(1, "complete allocator: 1000 fuzzed solves, all complete and fair up to "
                    "any two removals", [&]() -> std::string {
        if (ef2x_failures) return std::to_string(ef2x_failures) + " failures, first: " + ef2x_detail;
        std::ostringstream time_note;
        time_note << "1000/1000 in " << ef2x_elapsed << " s";
        if (ef2x_elapsed >= 60.0) return "too slow: " + time_note.str();
        return note(time_note.str());
    });

    reporter.run(2, "charity allocator: 1000 fuzzed solves, fair with a small unenvied "
                    "remainder, none below four agents", [&]() -> std::string {
        if (charity_failures)
            return std::to_string(charity_failures) + " failures, first: " + charity_detail;
        if (small_n_leftovers)
            return std::to_string(small_n_leftovers) + " small instances kept pooled goods";
        std::ostringstream time_note;
        time_note << "1000/1000 in " << charity_elapsed << " s";
        return note(time_note.str());
    });

    reporter.run(3, "greedy allocator: fair for valued removals, non-wasteful, "
                    "welfare-optimal, and fast at scale", [&]() -> std::string {
        FuzzParams params;
        params.algorithm = Algorithm::EfxPlus;
        params.count = kCampaignSize;
        params.jobs = worker_count();
        params.reproducer_dir.clear();
        const FuzzReport report = run_fuzz(params);
        if (report.exit_code() != 0)
            return std::to_string(report.failed + report.internal_errors) +
                   " failures, first: " + report.first_failure_message;

        const Instance big = random_instance(2026, 50, 5000);
        const auto start = Clock::now();
        const Allocation alloc = solve_efx_plus(big);
        const double elapsed = seconds_since(start);
        if (auto failure = verify_solver_result(big, Algorithm::EfxPlus, alloc))
            return "n=50 m=5000 run failed: " + *failure;
        std::ostringstream time_note;
        time_note << "campaign clean, n=50 m=5000 solved in " << elapsed << " s";
        if (elapsed >= 1.0) return "too slow: " + time_note.str();
        return note(time_note.str());
    });

    reporter.run(4, "ladder instances: no complete allocation is both efficient and "
                    "approximately fair", [&]() -> std::string {
        const std::vector<std::pair<int, Value>> family = {
            {1, Value{1}}, {2, Value{1}}, {2, Value::ratio(1, 2)}};
        for (const auto& [k, c] : family) {
            const Instance inst = counterexample_instance(k, c);
            int both = 0, fair = 0, efficient = 0, fair_not_efficient = 0;
            AllocationEnumerator stream(inst, false);
            while (auto alloc = stream.next()) {
                const bool is_fair = !check_c_efkx(inst, *alloc, k, c).has_value();
                const bool is_po = !check_pareto_bruteforce(inst, *alloc).has_value();
                both += is_fair && is_po;
                fair += is_fair;
                efficient += is_po;
                fair_not_efficient += is_fair && !is_po;
            }
            const std::string tag = "k=" + std::to_string(k) + " c=" + c.str();
            if (both) return tag + ": found " + std::to_string(both) + " fair efficient allocations";
            if (!fair_not_efficient) return tag + ": no fair-but-inefficient witness";
            if (!efficient) return tag + ": enumeration found no efficient allocation";
        }
        return "";
    });

    reporter.run(5, "envy elimination: 1000 arbitrary allocations repaired into valid "
                    "configurations without raising any value", [&]() -> std::string {
        int offences = 0;
        std::string detail;
        for (std::uint64_t seed = 0; seed < kCampaignSize; ++seed) {
            const Instance inst = fuzz_instance(seed, {});
            std::mt19937_64 scatter(seed * 0x9E3779B97F4A7C15ULL + 0xA5A5);
            Allocation arbitrary = Allocation::empty_of(inst);
            for (int g = 0; g < inst.goods(); ++g) {
                const int digit = static_cast<int>(scatter() % (inst.agents() + 1));
                if (digit < inst.agents()) {
                    arbitrary.pool.erase(g);
                    arbitrary.bundles[digit].insert(g);
                }
            }
            try {
                const Configuration config = envy_eliminate(inst, arbitrary);
                bool bad = !check_properties(inst, config).all_ok();
                bad = bad || !validate_allocation(inst, config.alloc).empty();
                for (int i = 0; i < inst.agents() && !bad; ++i) {
                    bad = bundle_value(inst, i, config.alloc.bundles[i]) >
                          bundle_value(inst, i, arbitrary.bundles[i]);
                    bad = bad || !std::includes(arbitrary.bundles[i].begin(),
                                                arbitrary.bundles[i].end(),
                                                config.alloc.bundles[i].begin(),
                                                config.alloc.bundles[i].end());
                }
                if (bad) {
                    ++offences;
                    if (detail.empty()) detail = "seed " + std::to_string(seed);
                }
            } catch (const std::exception& e) {
                ++offences;
                if (detail.empty())
                    detail = "seed " + std::to_string(seed) + " threw: " + e.what();
            }
        }
        if (offences) return std::to_string(offences) + " offences, first: " + detail;
        return "";
    });

    reporter.run(6, "potential: strictly increasing across every rule firing, also after "
                    "a serialization round trip", [&]() -> std::string {
        if (stats.monotonicity_offences || stats.chain_offences)
            return std::to_string(stats.monotonicity_offences) + " non-increasing firings, " +
                   std::to_string(stats.chain_offences) + " broken chains";
        if (stats.serialized_failures)
            return std::to_string(stats.serialized_failures) + " serialized traces failed";
        if (stats.firings < 5000)
            return "campaigns fired only " + std::to_string(stats.firings) + " rules";
        return note(std::to_string(stats.firings) + " firings checked");
    });

    reporter.run(7, "rule quiescence: pooled goods stay below the group count and every "
                    "pooled good is championed over every representative", [&]() -> std::string {
        if (exit_bound_failures)
            return std::to_string(exit_bound_failures) + " exit states broke the pool bound";
        if (pooled_bound_breaks)
            return std::to_string(pooled_bound_breaks) + " sampled states broke the pool bound";
        if (champion_gaps)
            return std::to_string(champion_gaps) + " missing champion edges, first: " + pooled_detail;
        if (pooled_states < 20)
            return "only " + std::to_string(pooled_states) + " pooled quiescent states reached";
        return note(std::to_string(exits_tested) + " exit states tested, " +
                    std::to_string(pooled_states) + " pooled quiescent states sampled");
    });

    reporter.run(8, "removal check: cheapest-removal shortcut agrees with exhaustive "
                    "subset enumeration on tiny instances", [&]() -> std::string {
        int mismatches = 0;
        long long compared = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const Instance inst = fuzz_instance(seed, FuzzShape{2, 3, 1, 6});
            AllocationEnumerator stream(inst, false);
            while (auto alloc = stream.next()) {
                for (int k = 1; k <= 2; ++k) {
                    ++compared;
                    const bool fast = !check_efkx(inst, *alloc, k).has_value();
                    if (fast != naive_efkx_holds(inst, *alloc, k)) ++mismatches;
                }
            }
        }
        if (mismatches) return std::to_string(mismatches) + " disagreements";
        return note(std::to_string(compared) + " comparisons");
    });

    return reporter.all_pass ? 0 : 1;
}
