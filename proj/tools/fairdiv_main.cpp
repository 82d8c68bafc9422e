// Command-line front end: solve / verify / fuzz / gen / trace.
//
// Exit codes: 0 success, 1 verification failed, 2 bad input,
// 3 internal invariant violation (a state the theory rules out).

#include "fairdiv/campaign.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/solvers.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using fairdiv::InputError;
using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(file);
    } catch (const json::parse_error& e) {
        throw InputError("cannot parse '" + path + "': " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << text;
}

fairdiv::SolveOptions options_from_env() {
    fairdiv::SolveOptions opts;
    if (const char* cap = std::getenv("FAIRDIV_STEP_CAP")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(cap, &end, 10);
        if (end == cap || *end != '\0' || parsed == 0)
            throw InputError("FAIRDIV_STEP_CAP must be a positive integer");
        opts.step_cap = parsed;
    }
    return opts;
}

fairdiv::Algorithm algorithm_from_name(const std::string& name) {
    if (name == "ef2x") return fairdiv::Algorithm::Ef2x;
    if (name == "efx-charity") return fairdiv::Algorithm::EfxCharity;
    if (name == "efx-plus") return fairdiv::Algorithm::EfxPlus;
    throw InputError("unknown algorithm '" + name + "'");
}

int cmd_solve(const std::string& algorithm, const std::string& in, const std::string& out,
              const std::string& trace_path, bool complete_dump) {
    const fairdiv::Instance inst = fairdiv::instance_from_json(read_json_file(in));
    const fairdiv::SolveOptions opts = options_from_env();

    fairdiv::Allocation alloc;
    std::vector<fairdiv::RuleTrace> trace;
    switch (algorithm_from_name(algorithm)) {
        case fairdiv::Algorithm::Ef2x: {
            auto result = fairdiv::solve_ef2x(inst, opts);
            alloc = std::move(result.allocation);
            trace = std::move(result.trace);
            break;
        }
        case fairdiv::Algorithm::EfxCharity: {
            auto result = fairdiv::solve_efx_charity(inst, opts);
            alloc = std::move(result.allocation);
            trace = std::move(result.trace);
            break;
        }
        case fairdiv::Algorithm::EfxPlus:
            alloc = fairdiv::solve_efx_plus(inst, complete_dump);
            break;
    }

    write_text(out, fairdiv::solve_output_json(inst, alloc, trace).dump(2) + "\n");
    if (!trace_path.empty())
        write_text(trace_path, json{{"trace", fairdiv::trace_to_json(inst, trace)}}.dump(2) + "\n");
    return 0;
}

int report_check(const fairdiv::Instance& inst, const fairdiv::CheckResult& result) {
    if (!result) {
        std::cout << json{{"ok", true}}.dump(2) << "\n";
        return 0;
    }
    std::cout << json{{"ok", false}, {"violation", fairdiv::violation_to_json(inst, *result)}}.dump(2)
              << "\n";
    return 1;
}

int cmd_verify(const std::string& property, const std::string& in, const std::string& alloc_path,
               int k, const std::string& c_text) {
    const fairdiv::Instance inst = fairdiv::instance_from_json(read_json_file(in));
    const fairdiv::Allocation alloc =
        fairdiv::allocation_from_json(inst, read_json_file(alloc_path));
    if (auto findings = fairdiv::validate_allocation(inst, alloc); !findings.empty())
        throw InputError("malformed allocation: " + findings.front());

    if (property == "ef") return report_check(inst, fairdiv::check_ef(inst, alloc));
    if (property == "ef1") return report_check(inst, fairdiv::check_ef1(inst, alloc));
    if (property == "efx") return report_check(inst, fairdiv::check_efkx(inst, alloc, 1));
    if (property == "ef2x") return report_check(inst, fairdiv::check_efkx(inst, alloc, 2));
    if (property == "efkx") {
        if (k < 0) throw InputError("--k is required for efkx");
        return report_check(inst, fairdiv::check_efkx(inst, alloc, k));
    }
    if (property == "c-efkx") {
        if (k < 0) throw InputError("--k is required for c-efkx");
        if (c_text.empty()) throw InputError("--c is required for c-efkx");
        return report_check(inst, fairdiv::check_c_efkx(inst, alloc, k, fairdiv::Value::parse(c_text)));
    }
    if (property == "efx-plus") return report_check(inst, fairdiv::check_efx_plus(inst, alloc));
    if (property == "nonwasteful") {
        const auto wasted = fairdiv::check_nonwasteful(inst, alloc);
        json listing = json::array();
        for (const auto& [agent, good] : wasted)
            listing.push_back({{"agent", agent}, {"good", inst.good_id(good)}});
        std::cout << json{{"ok", wasted.empty()}, {"wasted", listing}}.dump(2) << "\n";
        return wasted.empty() ? 0 : 1;
    }
    if (property == "po-bruteforce") {
        const auto dominating = fairdiv::check_pareto_bruteforce(inst, alloc);
        if (!dominating) {
            std::cout << json{{"ok", true}}.dump(2) << "\n";
            return 0;
        }
        std::cout << json{{"ok", false},
                          {"dominating", fairdiv::allocation_to_json(inst, *dominating)}}.dump(2)
                  << "\n";
        return 1;
    }
    throw InputError("unknown property '" + property + "'");
}

int cmd_fuzz(const std::string& algorithm, int count, std::uint64_t seed, int n_min, int n_max,
             int m_min, int m_max, int jobs) {
    fairdiv::FuzzParams params;
    params.algorithm = algorithm_from_name(algorithm);
    params.count = count;
    params.seed_base = seed;
    params.shape.n_min = n_min;
    params.shape.n_max = n_max;
    params.shape.m_min = m_min;
    params.shape.m_max = m_max;
    params.jobs = jobs;
    params.solve = options_from_env();

    const fairdiv::FuzzReport report = fairdiv::run_fuzz(params);
    std::cout << "algorithm: " << algorithm << "\n"
              << "instances: " << report.total << "  passed: " << report.passed
              << "  failed: " << report.failed << "  internal-errors: " << report.internal_errors
              << "\n"
              << "max rule steps: " << report.max_rule_steps << "\n";
    std::cout << "pool-left histogram:";
    for (const auto& [size, hits] : report.pool_left_histogram)
        std::cout << "  " << size << ":" << hits;
    std::cout << "\n";
    if (report.first_failure_seed) {
        std::cout << "first failure: seed " << *report.first_failure_seed << " ("
                  << report.first_failure_message << ")\n";
        if (!report.reproducer_path.empty())
            std::cout << "reproducer: " << report.reproducer_path << "\n";
    }
    return report.exit_code();
}

int cmd_trace(const std::string& in) {
    json doc = read_json_file(in);
    if (doc.is_object() && doc.contains("trace")) doc = doc.at("trace");
    const fairdiv::TraceCheck check = fairdiv::validate_trace_json(doc);

    std::size_t index = 0;
    for (const json& entry : doc) {
        std::ostringstream line;
        line << "#" << index++ << "  " << entry.value("rule", "?") << "  phi=";
        line << entry.value("phi", json::array()).dump();
        if (entry.contains("witness")) line << "  " << entry.at("witness").dump();
        std::cout << line.str() << "\n";
    }
    std::cout << "rule steps: " << check.rule_steps << ", phase steps: " << check.phase_steps
              << "\n";
    if (!check.ok) {
        std::cout << "MONOTONICITY VIOLATED: " << check.detail << "\n";
        return 1;
    }
    std::cout << "potential strictly increases\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fair division of indivisible goods under restricted additive valuations"};
    app.require_subcommand(1);

    std::string algorithm = "ef2x", in_path, out_path = "-", trace_path, alloc_path;
    std::string property = "efx", c_text;
    bool complete_dump = false;
    int k = -1;
    int count = 100, n_min = 2, n_max = 6, m_min = 1, m_max = 10, jobs = 1;
    std::uint64_t seed = 0;
    int gen_n = 2, gen_m = 5, gen_k = 1;
    long long value_lo = 1, value_hi = 10;
    double interest_prob = 0.6;
    std::string gen_c = "1", gen_out = "-";

    CLI::App* solve = app.add_subcommand("solve", "Run an allocator on an instance file");
    solve->add_option("--algorithm", algorithm, "ef2x | efx-charity | efx-plus");
    solve->add_option("--in", in_path, "instance JSON")->required();
    solve->add_option("--out", out_path, "allocation JSON ('-' for stdout)");
    solve->add_option("--trace", trace_path, "also write the rule trace here");
    solve->add_flag("--complete-dump", complete_dump,
                    "efx-plus: park unwanted goods on agent 0 instead of the pool");

    CLI::App* verify = app.add_subcommand("verify", "Check a property of an allocation file");
    verify->add_option("--property", property,
                       "ef | ef1 | efx | ef2x | efkx | c-efkx | efx-plus | nonwasteful | "
                       "po-bruteforce")
        ->required();
    verify->add_option("--in", in_path, "instance JSON")->required();
    verify->add_option("--alloc", alloc_path, "allocation JSON")->required();
    verify->add_option("--k", k, "removal count for efkx / c-efkx");
    verify->add_option("--c", c_text, "approximation factor for c-efkx");

    CLI::App* fuzz = app.add_subcommand("fuzz", "Seeded solve-and-verify campaign");
    fuzz->add_option("--algorithm", algorithm, "ef2x | efx-charity | efx-plus");
    fuzz->add_option("--count", count, "number of instances");
    fuzz->add_option("--seed", seed, "base seed");
    fuzz->add_option("--n-min", n_min);
    fuzz->add_option("--n-max", n_max);
    fuzz->add_option("--m-min", m_min);
    fuzz->add_option("--m-max", m_max);
    fuzz->add_option("--jobs", jobs, "worker threads");

    CLI::App* gen = app.add_subcommand("gen", "Emit an instance file");
    gen->require_subcommand(1);
    CLI::App* gen_random = gen->add_subcommand("random", "Seeded random instance");
    gen_random->add_option("--seed", seed)->required();
    gen_random->add_option("--n", gen_n, "agents");
    gen_random->add_option("--m", gen_m, "goods");
    gen_random->add_option("--value-lo", value_lo);
    gen_random->add_option("--value-hi", value_hi);
    gen_random->add_option("--interest-prob", interest_prob);
    gen_random->add_option("--out", gen_out);
    CLI::App* gen_counter = gen->add_subcommand(
        "counterexample", "Two-agent family with no Pareto-optimal c-EFkX allocation");
    gen_counter->add_option("--k", gen_k)->required();
    gen_counter->add_option("--c", gen_c, "rational in (0,1]");
    gen_counter->add_option("--out", gen_out);

    CLI::App* trace = app.add_subcommand("trace", "Re-validate and pretty-print a rule trace");
    trace->add_option("--in", in_path, "trace or solve-output JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(algorithm, in_path, out_path, trace_path, complete_dump);
        if (verify->parsed()) return cmd_verify(property, in_path, alloc_path, k, c_text);
        if (fuzz->parsed()) return cmd_fuzz(algorithm, count, seed, n_min, n_max, m_min, m_max, jobs);
        if (gen->parsed()) {
            fairdiv::Instance inst =
                gen_random->parsed()
                    ? fairdiv::random_instance(seed, gen_n, gen_m, {value_lo, value_hi},
                                               interest_prob)
                    : fairdiv::counterexample_instance(gen_k, fairdiv::Value::parse(gen_c));
            write_text(gen_out, fairdiv::instance_to_json(inst).dump(2) + "\n");
            return 0;
        }
        if (trace->parsed()) return cmd_trace(in_path);
        throw InputError("no command");
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const fairdiv::InternalError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        std::cerr << "this contradicts the termination/progress theory; please report it together "
                     "with the exact input\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
