#include "fairdiv/campaign.hpp"

#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <thread>
#include <vector>

namespace fairdiv {

std::optional<std::string> verify_solver_result(const Instance& inst, Algorithm algorithm,
                                                const Allocation& alloc) {
    if (auto findings = validate_allocation(inst, alloc); !findings.empty())
        return "structurally unsound: " + findings.front();

    switch (algorithm) {
        case Algorithm::Ef2x: {
            if (!alloc.pool.empty()) return "allocation is not complete";
            if (auto v = check_efkx(inst, alloc, 2))
                return "EF2X violated: agent " + std::to_string(v->envier) + " vs agent " +
                       std::to_string(v->envied);
            return std::nullopt;
        }
        case Algorithm::EfxCharity: {
            if (auto v = check_efkx(inst, alloc, 1))
                return "EFX violated: agent " + std::to_string(v->envier) + " vs agent " +
                       std::to_string(v->envied);
            // Fewer than floor(n/2) goods may stay pooled; the bound is
            // stated for n >= 2, and a single agent always gets everything.
            const std::size_t bound = inst.agents() >= 2 ? inst.agents() / 2 : 1;
            if (alloc.pool.size() >= bound)
                return "pool keeps " + std::to_string(alloc.pool.size()) +
                       " goods, bound is " + std::to_string(bound - 1);
            for (int i = 0; i < inst.agents(); ++i)
                if (own_value(inst, alloc, i) < bundle_value(inst, i, alloc.pool))
                    return "agent " + std::to_string(i) + " values the pool above its bundle";
            return std::nullopt;
        }
        case Algorithm::EfxPlus: {
            if (auto v = check_efx_plus(inst, alloc))
                return "EFX+ violated: agent " + std::to_string(v->envier) + " vs agent " +
                       std::to_string(v->envied);
            if (!check_nonwasteful(inst, alloc).empty()) return "allocation wastes a good";
            Value expected;
            for (int g = 0; g < inst.goods(); ++g)
                if (inst.wanted(g)) expected += inst.inherent_value(g);
            Value welfare;
            for (int i = 0; i < inst.agents(); ++i) welfare += own_value(inst, alloc, i);
            if (welfare != expected)
                return "welfare " + welfare.str() + " misses the optimum " + expected.str();
            return std::nullopt;
        }
    }
    return "unknown algorithm";
}

namespace {

struct Outcome {
    bool pass = false;
    bool internal = false;
    std::string message;
    std::size_t rule_steps = 0;
    std::size_t pool_left = 0;
};

Outcome run_one(const FuzzParams& params, std::uint64_t seed) {
    Outcome out;
    try {
        const Instance inst = fuzz_instance(seed, params.shape);
        Allocation alloc;
        if (params.algorithm == Algorithm::EfxPlus) {
            alloc = solve_efx_plus(inst);
        } else {
            const SolveResult result = params.algorithm == Algorithm::Ef2x
                                           ? solve_ef2x(inst, params.solve)
                                           : solve_efx_charity(inst, params.solve);
            alloc = result.allocation;
            for (const RuleTrace& t : result.trace)
                if (t.rule != RuleId::Phase) ++out.rule_steps;
        }
        out.pool_left = alloc.pool.size();
        if (auto failure = verify_solver_result(inst, params.algorithm, alloc)) {
            out.message = *failure;
        } else {
            out.pass = true;
        }
    } catch (const InternalError& e) {
        out.internal = true;
        out.message = e.what();
    } catch (const std::exception& e) {
        out.internal = true;
        out.message = std::string("unexpected: ") + e.what();
    }
    return out;
}

} // namespace

FuzzReport run_fuzz(const FuzzParams& params) {
    if (params.count < 0) throw InputError("negative campaign size");
    if (params.jobs < 1) throw InputError("jobs must be >= 1");

    std::vector<Outcome> outcomes(params.count);
    const int jobs = std::min<int>(params.jobs, std::max(params.count, 1));
    if (jobs <= 1) {
        for (int t = 0; t < params.count; ++t)
            outcomes[t] = run_one(params, params.seed_base + t);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (int t = w; t < params.count; t += jobs)
                    outcomes[t] = run_one(params, params.seed_base + t);
            });
        for (auto& worker : workers) worker.join();
    }

    // All aggregation happens in seed order, so the report is identical
    // whatever the thread interleaving was.
    FuzzReport report;
    report.total = params.count;
    for (int t = 0; t < params.count; ++t) {
        const Outcome& out = outcomes[t];
        report.max_rule_steps = std::max(report.max_rule_steps, out.rule_steps);
        if (out.pass) {
            ++report.passed;
            ++report.pool_left_histogram[out.pool_left];
            continue;
        }
        if (out.internal) ++report.internal_errors;
        else ++report.failed;
        if (!report.first_failure_seed) {
            report.first_failure_seed = params.seed_base + t;
            report.first_failure_message = out.message;
        }
    }

    if (report.first_failure_seed && !params.reproducer_dir.empty()) {
        const std::uint64_t seed = *report.first_failure_seed;
        const Instance inst = fuzz_instance(seed, params.shape);
        const std::string path = params.reproducer_dir + "/fairdiv-repro-seed" +
                                 std::to_string(seed) + ".json";
        std::ofstream file(path);
        file << instance_to_json(inst).dump(2) << "\n";
        if (file) report.reproducer_path = path;
    }
    return report;
}

} // namespace fairdiv
