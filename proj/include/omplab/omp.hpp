#pragma once

#include <string>
#include <vector>

#include "omplab/matrix.hpp"
#include "omplab/model.hpp"

namespace omplab {

// Correlation values within this absolute distance of the maximum form the
// tie set of a selection step.
inline constexpr double kTieTolerance = 1e-12;

// Iterations stop early once ||residual|| <= kResidualStopRelTol * ||y||.
inline constexpr double kResidualStopRelTol = 1e-12;

// Recovery additionally requires ||estimate - x|| <= kRecoveryRelTol * ||x||.
inline constexpr double kRecoveryRelTol = 1e-8;

// Rule for resolving a non-unique argmax in the selection step.
// AdversarialOffSupport prefers the smallest tied index outside `avoid`,
// falling back to LowestIndex when every tied index is inside it.
struct TieBreakPolicy {
    enum class Kind { LowestIndex, HighestIndex, AdversarialOffSupport };

    Kind kind = Kind::LowestIndex;
    Support avoid;

    static TieBreakPolicy lowest() { return {Kind::LowestIndex, {}}; }
    static TieBreakPolicy highest() { return {Kind::HighestIndex, {}}; }
    static TieBreakPolicy adversarial_off_support(Support support)
    {
        return {Kind::AdversarialOffSupport, std::move(support)};
    }

    std::string name() const;
};

struct SelectionResult {
    int index = -1;
    bool tie_detected = false;
};

// Index of maximal |value| among non-excluded indices, ties resolved by the
// policy. Throws std::invalid_argument when every index is excluded.
SelectionResult select_index(const std::vector<double>& values, const Support& excluded,
                             const TieBreakPolicy& policy);

struct OmpIteration {
    int selected_index = -1;
    std::vector<double> correlation_values;
    bool tie_detected = false;
    double residual_norm = 0.0;
};

struct OmpTrace {
    std::vector<OmpIteration> iterations;
    SparseSignal final_estimate;
    Support final_support;
    bool rank_deficient = false;
};

// Greedy pursuit: per iteration pick the column most correlated with the
// residual, re-solve least squares on the selected set, update the residual.
// Runs `iterations` rounds, stopping early on a negligible residual.
OmpTrace omp_run(const DenseMatrix& a, const std::vector<double>& y, int iterations,
                 const TieBreakPolicy& policy);

// Support equality plus coefficient closeness of the trace's final estimate.
bool trace_recovers(const OmpTrace& trace, const SparseSignal& x);

// Runs omp_run for ||x||_0 iterations on y = A x and checks recovery.
bool recovers(const DenseMatrix& a, const SparseSignal& x, const TieBreakPolicy& policy);

} // namespace omplab
