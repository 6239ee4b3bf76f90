#include "omplab/experiments.hpp"

#include <stdexcept>

#include "omplab/omp.hpp"

namespace omplab {

InstanceOutcome evaluate_instance(const DenseMatrix& a, int sparsity, int signals,
                                  Xoshiro256pp& rng, long long budget)
{
    if (sparsity < 1 || sparsity + 1 > a.cols())
        throw std::invalid_argument("evaluate_instance: need 1 <= sparsity < column count");
    if (signals < 1)
        throw std::invalid_argument("evaluate_instance: need at least one test signal");

    InstanceOutcome outcome;
    const RicReport ric = ric_exact(a, sparsity + 1, budget);
    outcome.delta = ric.delta;
    outcome.condition_holds = theorem1_condition(ric.delta, sparsity);
    if (!outcome.condition_holds)
        return outcome;

    constexpr SignalPattern patterns[] = {SignalPattern::AllOnes, SignalPattern::Gaussian,
                                          SignalPattern::Alternating};
    for (int s = 0; s < signals; ++s) {
        const Support support = random_support(a.cols(), sparsity, rng);
        const SparseSignal x = make_signal(a.cols(), support, patterns[s % 3], rng);
        const std::vector<double> y = apply(a, x.entries);
        ++outcome.signals_tested;

        const TieBreakPolicy policies[] = {
            TieBreakPolicy::lowest(),
            TieBreakPolicy::highest(),
            TieBreakPolicy::adversarial_off_support(x.support),
        };
        for (const auto& policy : policies) {
            const OmpTrace trace = omp_run(a, y, sparsity, policy);
            ++outcome.recovery_attempts;
            if (trace_recovers(trace, x))
                ++outcome.recovery_successes;
            for (const auto& iteration : trace.iterations)
                if (!x.support.contains(iteration.selected_index))
                    outcome.selected_in_support = false;
        }

        const Lemma1Report lemma = check_lemma1(a, x, ric.delta);
        const bool bounds_ok = lemma.s0 >= lemma.eq2_lower_bound - kLemmaBoundSlack &&
                               lemma.max_off_support <= lemma.eq1_upper_bound + kLemmaBoundSlack;
        if (!lemma.conclusion_holds || !bounds_ok)
            outcome.lemma1_ok = false;
    }
    return outcome;
}

Theorem1Report run_theorem1(const ExperimentConfig& config)
{
    if (config.trials < 1)
        throw std::invalid_argument("run_theorem1: need at least one trial");
    if (config.m < 1 || config.n < 1)
        throw std::invalid_argument("run_theorem1: dimensions must be positive");
    if (config.sparsity < 1 || config.sparsity + 1 > config.n)
        throw std::invalid_argument("run_theorem1: need 1 <= sparsity < n");
    if (config.signals_per_instance < 1)
        throw std::invalid_argument("run_theorem1: need at least one signal per instance");

    Theorem1Report report;
    report.config = config;

    std::uint64_t seed_state = config.seed;
    for (int t = 0; t < config.trials; ++t) {
        TrialRecord record;
        record.index = t;
        record.seed = splitmix64(seed_state);

        Xoshiro256pp rng(record.seed);
        const DenseMatrix a = random_matrix(config.m, config.n, config.ensemble, rng);
        record.outcome = evaluate_instance(a, config.sparsity, config.signals_per_instance, rng,
                                           config.budget);

        if (record.outcome.condition_holds) {
            ++report.condition_holds_count;
            report.attempts_on_condition += record.outcome.recovery_attempts;
            report.successes_on_condition += record.outcome.recovery_successes;
            report.selected_in_support_all =
                report.selected_in_support_all && record.outcome.selected_in_support;
            report.lemma1_all_hold = report.lemma1_all_hold && record.outcome.lemma1_ok;
        }
        report.trials.push_back(std::move(record));
    }

    report.overall = report.successes_on_condition == report.attempts_on_condition &&
                     report.selected_in_support_all && report.lemma1_all_hold;
    return report;
}

} // namespace omplab
