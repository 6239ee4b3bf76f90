#pragma once

#include <stdexcept>

#include "omplab/matrix.hpp"
#include "omplab/model.hpp"

namespace omplab {

struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultSubsetBudget = 2'000'000;

struct RicReport {
    int order = 0;
    double delta = 0.0;
    Support witness_support;     // lexicographically smallest attaining subset
    double lambda_min = 0.0;     // extreme eigenvalues of the witness Gram
    double lambda_max = 0.0;
    long long subsets_examined = 0;
};

// min(C(n, k), cap + 1); never overflows.
long long binomial_capped(int n, int k, long long cap);

// Exact restricted isometry constant of the given order by exhaustive
// enumeration of column subsets. Throws BudgetExceededError when the subset
// count exceeds the budget.
RicReport ric_exact(const DenseMatrix& a, int order, long long budget = kDefaultSubsetBudget);

// Strict sufficiency test: delta < 1 / (sqrt(k) + 1).
bool theorem1_condition(double delta, int k);

struct Lemma1Report {
    double s0 = 0.0;               // max in-support correlation magnitude
    double max_off_support = 0.0;  // max |S_i| outside the support
    double eq2_lower_bound = 0.0;  // (1 - delta) * ||x||_2 / sqrt(k)
    double eq1_upper_bound = 0.0;  // delta * ||x||_2
    bool condition_holds = false;  // delta < 1 / (sqrt(k) + 1)
    bool conclusion_holds = false; // s0 strictly beats every off-support |S_i|
};

// Correlation bounds for y = A x against the caller-supplied delta, which
// should be the exact RIC of A at order ||x||_0 + 1.
Lemma1Report check_lemma1(const DenseMatrix& a, const SparseSignal& x, double delta);

} // namespace omplab
