#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omplab/matrix.hpp"
#include "omplab/rip.hpp"
#include "omplab/rng.hpp"

namespace omplab {

// Bounds checked by lemma-1 evaluation carry this much slack.
inline constexpr double kLemmaBoundSlack = 1e-12;

struct ExperimentConfig {
    std::uint64_t seed = 1;
    int trials = 200;
    int m = 12;
    int n = 18;
    int sparsity = 2;
    Ensemble ensemble = Ensemble::GaussianUnitColumns;
    std::string tie_policy = "all"; // recovery always runs all three policies
    int signals_per_instance = 10;
    long long budget = kDefaultSubsetBudget;
};

// One matrix judged against the recovery guarantee: exact delta, whether the
// sufficiency condition holds, and (when it does) recovery plus lemma-1
// outcomes over a batch of test signals.
struct InstanceOutcome {
    double delta = 0.0;
    bool condition_holds = false;
    int signals_tested = 0;
    int recovery_attempts = 0;
    int recovery_successes = 0;
    bool selected_in_support = true; // every selection landed in the true support
    bool lemma1_ok = true;           // conclusion and both bounds on every signal
};

InstanceOutcome evaluate_instance(const DenseMatrix& a, int sparsity, int signals,
                                  Xoshiro256pp& rng, long long budget);

struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0;
    InstanceOutcome outcome;
};

struct Theorem1Report {
    ExperimentConfig config;
    std::vector<TrialRecord> trials;
    int condition_holds_count = 0;
    long long attempts_on_condition = 0;
    long long successes_on_condition = 0;
    bool selected_in_support_all = true;
    bool lemma1_all_hold = true;
    bool overall = true;
};

// Seeded sweep over random matrices; per-trial seeds come from a SplitMix64
// stream so any single trial can be reproduced in isolation.
Theorem1Report run_theorem1(const ExperimentConfig& config);

} // namespace omplab
