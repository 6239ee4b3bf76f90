// Command line front end. Subcommands cover the five workflows: exact RIC
// computation, a single pursuit run, the tight counterexample check, the
// randomized threshold experiment, and seeded instance generation.
//
// Exit codes: 0 all checks passed, 1 a verification check failed, 2 bad
// input (files, flags, malformed data), 3 subset budget exceeded.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omplab/counterexample.hpp"
#include "omplab/experiments.hpp"
#include "omplab/matrix.hpp"
#include "omplab/matrix_io.hpp"
#include "omplab/model.hpp"
#include "omplab/omp.hpp"
#include "omplab/reports.hpp"
#include "omplab/rip.hpp"
#include "omplab/rng.hpp"

using namespace omplab;

namespace {

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

// Text output is 1-based; JSON stays 0-based.
std::string one_based_list(const std::vector<int>& indices)
{
    if (indices.empty())
        return "(none)";
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(indices[i] + 1);
    }
    return out;
}

std::string double_list(const std::vector<double>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ' ';
        out += format_double(values[i]);
    }
    return out;
}

void write_json(const std::string& path, const ojson& j)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    out << j.dump(2) << '\n';
}

void print_checks(const VerificationReport& report)
{
    std::cout << "checks:\n";
    for (const auto& check : report.checks)
        std::cout << "  " << (check.passed ? "PASS" : "FAIL") << ' ' << check.name << '\n';
    std::cout << "overall: " << (report.overall() ? "PASS" : "FAIL") << '\n';
}

struct RicArgs {
    std::string matrix;
    int order = 1;
    long long budget = kDefaultSubsetBudget;
    std::string json;
};

int run_ric(const RicArgs& args)
{
    const DenseMatrix a = load_matrix(args.matrix);
    const RicReport r = ric_exact(a, args.order, args.budget);
    std::cout << "matrix: " << a.rows() << " rows, " << a.cols() << " columns\n"
              << "order: " << r.order << '\n'
              << "delta: " << format_double(r.delta) << '\n'
              << "witness columns (1-based): " << one_based_list(r.witness_support.indices())
              << '\n'
              << "witness eigenvalue range: [" << format_double(r.lambda_min) << ", "
              << format_double(r.lambda_max) << "]\n"
              << "subsets examined: " << r.subsets_examined << '\n';
    if (!args.json.empty()) {
        const ojson inputs{{"matrix", args.matrix}, {"order", args.order}, {"budget", args.budget}};
        write_json(args.json, wrap_report("ric", inputs, "ric", report_json(r)));
    }
    return 0;
}

struct OmpArgs {
    std::string matrix;
    std::string signal;
    std::string y;
    int iterations = 0; // 0 means "derive from the signal"
    std::string policy = "lowest";
    std::string json;
};

int run_omp(const OmpArgs& args)
{
    const DenseMatrix a = load_matrix(args.matrix);

    std::optional<SparseSignal> x;
    std::vector<double> y;
    if (!args.signal.empty()) {
        x = SparseSignal::from_entries(load_vector(args.signal));
        y = omplab::apply(a, x->entries);
    } else if (!args.y.empty()) {
        y = load_vector(args.y);
        if (args.iterations <= 0)
            throw std::invalid_argument("--y requires --k (the iteration count)");
    } else {
        throw std::invalid_argument("omp needs either --signal or --y");
    }

    TieBreakPolicy policy = TieBreakPolicy::lowest();
    if (args.policy == "highest") {
        policy = TieBreakPolicy::highest();
    } else if (args.policy == "adversarial") {
        if (!x)
            throw std::invalid_argument(
                "--policy adversarial requires --signal (it avoids the signal's support)");
        policy = TieBreakPolicy::adversarial_off_support(x->support);
    }

    const int iterations = args.iterations > 0 ? args.iterations : x->sparsity();
    const OmpTrace trace = omp_run(a, y, iterations, policy);

    std::cout << "matrix: " << a.rows() << " rows, " << a.cols() << " columns\n"
              << "policy: " << policy.name() << '\n'
              << "iterations run: " << trace.iterations.size() << '\n';
    for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
        const auto& it = trace.iterations[i];
        double peak = 0.0;
        for (double v : it.correlation_values)
            peak = std::max(peak, std::abs(v));
        std::cout << "iteration " << i + 1 << ": selected column " << it.selected_index + 1
                  << ", peak |correlation| " << format_double(peak) << ", tie "
                  << yes_no(it.tie_detected) << ", residual norm "
                  << format_double(it.residual_norm) << '\n';
    }
    std::cout << "final support (1-based): " << one_based_list(trace.final_support.indices())
              << '\n'
              << "rank deficient: " << yes_no(trace.rank_deficient) << '\n';

    bool recovered = false;
    if (x) {
        recovered = trace_recovers(trace, *x);
        std::cout << "recovered the signal: " << yes_no(recovered) << '\n';
    }

    if (!args.json.empty()) {
        ojson inputs{{"matrix", args.matrix}, {"policy", args.policy}, {"iterations", iterations}};
        if (!args.signal.empty())
            inputs["signal"] = args.signal;
        if (!args.y.empty())
            inputs["y"] = args.y;
        ojson j = wrap_report("omp", inputs, "trace", report_json(trace));
        if (x)
            j["recovered"] = recovered;
        write_json(args.json, j);
    }
    return x && !recovered ? 1 : 0;
}

struct CounterexampleArgs {
    int k = 2;
    long long budget = kDefaultSubsetBudget;
    std::string json;
};

int run_counterexample(const CounterexampleArgs& args)
{
    const CounterexampleReport r = verify_counterexample(args.k, args.budget);
    const VerificationReport verification = counterexample_verification(r);

    std::cout << "construction: K=" << r.k << " (" << r.k + 1 << "x" << r.k + 1 << " matrix)\n"
              << "delta measured: " << format_double(r.delta_measured) << '\n'
              << "delta analytic (1/sqrt(K)): " << format_double(r.delta_analytic) << '\n'
              << "gram spectrum: " << double_list(r.spectrum) << '\n'
              << "first-iteration correlations: " << double_list(r.correlations_at_y) << '\n'
              << "tie at the first pick: " << yes_no(r.omp_first_pick_tie) << '\n';
    for (const char* name : {"lowest", "highest", "adversarial"}) {
        const bool failed = std::find(r.omp_failed_under.begin(), r.omp_failed_under.end(),
                                      name) != r.omp_failed_under.end();
        std::cout << "recovery under " << name << ": " << (failed ? "failed" : "succeeded")
                  << '\n';
    }
    print_checks(verification);

    if (!args.json.empty())
        write_json(args.json, report_json(verification, report_json(r)));
    return verification.overall() ? 0 : 1;
}

struct Theorem1Args {
    ExperimentConfig config;
    std::string ensemble = "unit";
    std::string json;
};

int run_theorem1(Theorem1Args& args)
{
    args.config.ensemble = parse_ensemble(args.ensemble);
    const Theorem1Report report = run_theorem1(args.config);

    const auto& c = report.config;
    const int trials = static_cast<int>(report.trials.size());
    std::cout << "trials: " << trials << " (m=" << c.m << ", n=" << c.n << ", k=" << c.sparsity
              << ", ensemble=" << ensemble_name(c.ensemble) << ", seed=" << c.seed << ")\n"
              << "condition delta < 1/(sqrt(k)+1) holds on: " << report.condition_holds_count
              << " of " << trials << " instances\n"
              << "recovery on condition-holds instances: " << report.successes_on_condition
              << "/" << report.attempts_on_condition << '\n'
              << "every selection inside the true support: "
              << yes_no(report.selected_in_support_all) << '\n'
              << "correlation bounds held on every tested signal: "
              << yes_no(report.lemma1_all_hold) << '\n'
              << "overall: " << (report.overall ? "PASS" : "FAIL") << '\n';

    if (!args.json.empty())
        write_json(args.json,
                   wrap_report("theorem1", report_json(args.config), "theorem1",
                               report_json(report)));
    return report.overall ? 0 : 1;
}

struct GenArgs {
    std::string matrix;
    std::string signal;
    int m = 12;
    int n = 18;
    int sparsity = 2;
    std::uint64_t seed = 1;
    std::string ensemble = "unit";
};

int run_gen(const GenArgs& args)
{
    Xoshiro256pp rng(args.seed);
    const DenseMatrix a = random_matrix(args.m, args.n, parse_ensemble(args.ensemble), rng);
    save_matrix(a, args.matrix);
    std::cout << "wrote " << args.m << "x" << args.n << " matrix to " << args.matrix << '\n';
    if (!args.signal.empty()) {
        const Support support = random_support(args.n, args.sparsity, rng);
        const SparseSignal x = make_signal(args.n, support, SignalPattern::Gaussian, rng);
        save_vector(x.entries, args.signal);
        std::cout << "wrote " << args.sparsity << "-sparse signal of length " << args.n
                  << " to " << args.signal << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"sparse recovery toolkit: greedy pursuit, exact restricted isometry "
                 "constants, and threshold experiments"};
    app.require_subcommand(1);

    RicArgs ric_args;
    auto* ric = app.add_subcommand("ric", "exact restricted isometry constant of a matrix");
    ric->add_option("--matrix", ric_args.matrix, "matrix file")->required();
    ric->add_option("--order", ric_args.order, "subset size K")
        ->required()
        ->check(CLI::PositiveNumber);
    ric->add_option("--budget", ric_args.budget, "max column subsets to enumerate")
        ->check(CLI::PositiveNumber);
    ric->add_option("--json", ric_args.json, "write a JSON report to this file");

    OmpArgs omp_args;
    auto* omp = app.add_subcommand("omp", "run orthogonal matching pursuit");
    omp->add_option("--matrix", omp_args.matrix, "matrix file")->required();
    auto* signal_opt =
        omp->add_option("--signal", omp_args.signal, "sparse signal file; measures y = A x");
    omp->add_option("--y", omp_args.y, "measurement vector file")->excludes(signal_opt);
    omp->add_option("--k", omp_args.iterations,
                    "iteration count (defaults to the signal's sparsity)")
        ->check(CLI::PositiveNumber);
    omp->add_option("--policy", omp_args.policy, "tie-break policy (default lowest)")
        ->check(CLI::IsMember({"lowest", "highest", "adversarial"}));
    omp->add_option("--json", omp_args.json, "write a JSON report to this file");

    CounterexampleArgs ce_args;
    auto* ce = app.add_subcommand("counterexample",
                                  "verify the tight construction with delta = 1/sqrt(K)");
    ce->add_option("--k", ce_args.k, "sparsity level K (at least 2)")
        ->required()
        ->check(CLI::Range(2, 1000));
    ce->add_option("--budget", ce_args.budget, "max column subsets to enumerate")
        ->check(CLI::PositiveNumber);
    ce->add_option("--json", ce_args.json, "write a JSON report to this file");

    Theorem1Args t1_args;
    auto* t1 = app.add_subcommand("theorem1",
                                  "randomized check of the sufficiency threshold");
    t1->add_option("--seed", t1_args.config.seed, "master seed (default 1)");
    t1->add_option("--trials", t1_args.config.trials, "number of random matrices")
        ->check(CLI::PositiveNumber);
    t1->add_option("--m", t1_args.config.m, "rows per matrix")->check(CLI::PositiveNumber);
    t1->add_option("--n", t1_args.config.n, "columns per matrix")->check(CLI::PositiveNumber);
    t1->add_option("--k", t1_args.config.sparsity, "signal sparsity")
        ->check(CLI::PositiveNumber);
    t1->add_option("--ensemble", t1_args.ensemble, "matrix ensemble (default unit)")
        ->check(CLI::IsMember({"unit", "raw"}));
    t1->add_option("--signals", t1_args.config.signals_per_instance,
                   "test signals per matrix (default 10)")
        ->check(CLI::PositiveNumber);
    t1->add_option("--budget", t1_args.config.budget, "max column subsets per matrix")
        ->check(CLI::PositiveNumber);
    t1->add_option("--json", t1_args.json, "write a JSON report to this file");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
    gen->add_option("--matrix", gen_args.matrix, "output path for the matrix")->required();
    gen->add_option("--signal", gen_args.signal, "optional output path for a sparse signal");
    gen->add_option("--m", gen_args.m, "rows")->check(CLI::PositiveNumber);
    gen->add_option("--n", gen_args.n, "columns")->check(CLI::PositiveNumber);
    gen->add_option("--k", gen_args.sparsity, "signal sparsity (with --signal)")
        ->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_args.seed, "seed (default 1)");
    gen->add_option("--ensemble", gen_args.ensemble, "matrix ensemble (default unit)")
        ->check(CLI::IsMember({"unit", "raw"}));

    int rc = 0;
    ric->callback([&] { rc = run_ric(ric_args); });
    omp->callback([&] { rc = run_omp(omp_args); });
    ce->callback([&] { rc = run_counterexample(ce_args); });
    t1->callback([&] { rc = run_theorem1(t1_args); });
    gen->callback([&] { rc = run_gen(gen_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ", column " << e.column
                  << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
