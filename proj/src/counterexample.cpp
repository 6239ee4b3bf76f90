#include "omplab/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "omplab/numerics.hpp"
#include "omplab/omp.hpp"

namespace omplab {

DenseMatrix build_matrix(int k)
{
    if (k < 2)
        throw std::invalid_argument("build_matrix: k must be at least 2");
    const int n = k + 1;
    DenseMatrix a(n, n);
    for (int j = 0; j < k; ++j)
        a(j, j) = 1.0;
    const double off = 1.0 / static_cast<double>(k);
    for (int i = 0; i < k; ++i)
        a(i, k) = off;
    a(k, k) = std::sqrt(static_cast<double>(k - 1) / static_cast<double>(k));
    return a;
}

SparseSignal build_signal(int k)
{
    if (k < 2)
        throw std::invalid_argument("build_signal: k must be at least 2");
    std::vector<double> entries(static_cast<std::size_t>(k + 1), 1.0);
    entries.back() = 0.0;
    return SparseSignal::from_entries(std::move(entries));
}

std::vector<double> analytic_spectrum(int k)
{
    const double bump = 1.0 / std::sqrt(static_cast<double>(k));
    std::vector<double> spectrum;
    spectrum.push_back(1.0 - bump);
    for (int i = 0; i < k - 1; ++i)
        spectrum.push_back(1.0);
    spectrum.push_back(1.0 + bump);
    return spectrum;
}

CounterexampleReport verify_counterexample(int k, long long budget)
{
    const DenseMatrix a = build_matrix(k);
    const SparseSignal x = build_signal(k);

    CounterexampleReport report;
    report.k = k;
    report.delta_analytic = 1.0 / std::sqrt(static_cast<double>(k));

    const RicReport ric = ric_exact(a, k + 1, budget);
    report.delta_measured = ric.delta;
    report.spectrum = sym_eigenvalues(gram(a));

    const std::vector<double> y = apply(a, x.entries);
    report.correlations_at_y = correlations(a, y, x.support).values;

    const TieBreakPolicy policies[] = {
        TieBreakPolicy::lowest(),
        TieBreakPolicy::highest(),
        TieBreakPolicy::adversarial_off_support(x.support),
    };
    bool first = true;
    for (const auto& policy : policies) {
        const OmpTrace trace = omp_run(a, y, k, policy);
        if (first) {
            report.omp_first_pick_tie =
                !trace.iterations.empty() && trace.iterations.front().tie_detected;
            first = false;
        }
        if (!trace_recovers(trace, x))
            report.omp_failed_under.push_back(policy.name());
    }
    return report;
}

} // namespace omplab
