#include "omplab/rip.hpp"

#include <algorithm>
#include <cmath>

#include "omplab/numerics.hpp"

namespace omplab {

long long binomial_capped(int n, int k, long long cap)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > static_cast<unsigned __int128>(cap))
            return cap + 1;
    }
    return static_cast<long long>(r);
}

namespace {

// Lexicographic successor of a k-combination of {0,...,n-1}; false at the end.
bool next_combination(std::vector<int>& c, int n)
{
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

RicReport ric_exact(const DenseMatrix& a, int order, long long budget)
{
    if (order < 1 || order > a.cols())
        throw std::invalid_argument("ric_exact: need 1 <= order <= column count");
    const long long subsets = binomial_capped(a.cols(), order, budget);
    if (subsets > budget)
        throw BudgetExceededError("ric_exact: C(" + std::to_string(a.cols()) + ", " +
                                  std::to_string(order) + ") exceeds the enumeration budget of " +
                                  std::to_string(budget));

    const DenseMatrix g = gram(a);

    RicReport report;
    report.order = order;
    report.delta = -1.0;

    std::vector<int> combo(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i)
        combo[static_cast<std::size_t>(i)] = i;

    long long examined = 0;
    do {
        const DenseMatrix sub = g.principal_submatrix(combo);
        const std::vector<double> eig = sym_eigenvalues(sub);
        const double lo = eig.front();
        const double hi = eig.back();
        const double deviation = std::max(hi - 1.0, 1.0 - lo);
        ++examined;
        if (deviation > report.delta) {
            report.delta = deviation;
            report.witness_support = Support::from_indices(combo);
            report.lambda_min = lo;
            report.lambda_max = hi;
        }
    } while (next_combination(combo, a.cols()));

    report.subsets_examined = examined;
    return report;
}

bool theorem1_condition(double delta, int k)
{
    if (delta < 0.0)
        throw std::invalid_argument("theorem1_condition: delta must be nonnegative");
    if (k < 1)
        throw std::invalid_argument("theorem1_condition: k must be positive");
    return delta < 1.0 / (std::sqrt(static_cast<double>(k)) + 1.0);
}

Lemma1Report check_lemma1(const DenseMatrix& a, const SparseSignal& x, double delta)
{
    if (x.length() != a.cols())
        throw std::invalid_argument("check_lemma1: signal length does not match column count");
    if (x.sparsity() < 1)
        throw std::invalid_argument("check_lemma1: signal must have at least one nonzero");
    if (delta < 0.0)
        throw std::invalid_argument("check_lemma1: delta must be nonnegative");

    const int k = x.sparsity();
    const std::vector<double> y = apply(a, x.entries);
    const CorrelationProfile profile = correlations(a, y, x.support);

    Lemma1Report report;
    report.s0 = profile.s0;
    report.max_off_support = 0.0;
    bool any_off_support = false;
    for (int i = 0; i < a.cols(); ++i) {
        if (x.support.contains(i))
            continue;
        any_off_support = true;
        report.max_off_support =
            std::max(report.max_off_support, std::abs(profile.values[static_cast<std::size_t>(i)]));
    }

    report.eq2_lower_bound = (1.0 - delta) * x.norm2() / std::sqrt(static_cast<double>(k));
    report.eq1_upper_bound = delta * x.norm2();
    report.condition_holds = theorem1_condition(delta, k);
    report.conclusion_holds = !any_off_support || report.s0 > report.max_off_support;
    return report;
}

} // namespace omplab
