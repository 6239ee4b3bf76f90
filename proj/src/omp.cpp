#include "omplab/omp.hpp"

#include <cmath>
#include <stdexcept>

#include "omplab/numerics.hpp"

namespace omplab {

std::string TieBreakPolicy::name() const
{
    switch (kind) {
    case Kind::LowestIndex:
        return "lowest";
    case Kind::HighestIndex:
        return "highest";
    case Kind::AdversarialOffSupport:
        return "adversarial";
    }
    return "unknown";
}

SelectionResult select_index(const std::vector<double>& values, const Support& excluded,
                             const TieBreakPolicy& policy)
{
    const int n = static_cast<int>(values.size());
    double max_abs = -1.0;
    for (int i = 0; i < n; ++i) {
        if (excluded.contains(i))
            continue;
        max_abs = std::max(max_abs, std::abs(values[static_cast<std::size_t>(i)]));
    }
    if (max_abs < 0.0)
        throw std::invalid_argument("select_index: every index is excluded");

    std::vector<int> tied;
    for (int i = 0; i < n; ++i) {
        if (excluded.contains(i))
            continue;
        if (std::abs(values[static_cast<std::size_t>(i)]) >= max_abs - kTieTolerance)
            tied.push_back(i);
    }

    SelectionResult result;
    result.tie_detected = tied.size() > 1;
    switch (policy.kind) {
    case TieBreakPolicy::Kind::LowestIndex:
        result.index = tied.front();
        break;
    case TieBreakPolicy::Kind::HighestIndex:
        result.index = tied.back();
        break;
    case TieBreakPolicy::Kind::AdversarialOffSupport:
        result.index = tied.front();
        for (int i : tied) {
            if (!policy.avoid.contains(i)) {
                result.index = i;
                break;
            }
        }
        break;
    }
    return result;
}

OmpTrace omp_run(const DenseMatrix& a, const std::vector<double>& y, int iterations,
                 const TieBreakPolicy& policy)
{
    if (iterations < 1 || iterations > a.cols())
        throw std::invalid_argument("omp_run: need 1 <= iterations <= column count");
    if (static_cast<int>(y.size()) != a.rows())
        throw std::invalid_argument("omp_run: measurement length does not match row count");

    const double y_norm = norm2(y);
    std::vector<double> residual = y;
    Support selected;
    std::vector<double> coefficients;

    OmpTrace trace;
    for (int j = 0; j < iterations; ++j) {
        if (norm2(residual) <= kResidualStopRelTol * y_norm)
            break;

        const CorrelationProfile profile = correlations(a, residual, Support{});
        const SelectionResult pick = select_index(profile.values, selected, policy);
        selected = selected.with(pick.index);

        const DenseMatrix a_sub = a.select_columns(selected.indices());
        const LstsqResult solve = least_squares(a_sub, y);
        trace.rank_deficient = trace.rank_deficient || solve.rank_deficient;
        coefficients = solve.solution;

        const std::vector<double> fitted = apply(a_sub, coefficients);
        for (std::size_t i = 0; i < residual.size(); ++i)
            residual[i] = y[i] - fitted[i];

        OmpIteration record;
        record.selected_index = pick.index;
        record.correlation_values = profile.values;
        record.tie_detected = pick.tie_detected;
        record.residual_norm = norm2(residual);
        trace.iterations.push_back(std::move(record));
    }

    std::vector<double> estimate(static_cast<std::size_t>(a.cols()), 0.0);
    const auto& support_indices = selected.indices();
    for (std::size_t i = 0; i < support_indices.size(); ++i)
        estimate[static_cast<std::size_t>(support_indices[i])] = coefficients[i];
    trace.final_estimate = SparseSignal::from_entries(std::move(estimate));
    trace.final_support = selected;
    return trace;
}

bool trace_recovers(const OmpTrace& trace, const SparseSignal& x)
{
    if (!(trace.final_support == x.support))
        return false;
    double diff2 = 0.0;
    for (std::size_t i = 0; i < x.entries.size(); ++i) {
        const double d = trace.final_estimate.entries[i] - x.entries[i];
        diff2 += d * d;
    }
    return std::sqrt(diff2) <= kRecoveryRelTol * x.norm2();
}

bool recovers(const DenseMatrix& a, const SparseSignal& x, const TieBreakPolicy& policy)
{
    if (x.sparsity() < 1)
        throw std::invalid_argument("recovers: signal must have at least one nonzero");
    if (x.length() != a.cols())
        throw std::invalid_argument("recovers: signal length does not match column count");
    const std::vector<double> y = apply(a, x.entries);
    const OmpTrace trace = omp_run(a, y, x.sparsity(), policy);
    return trace_recovers(trace, x);
}

} // namespace omplab
