#pragma once

#include <string>
#include <vector>

#include "omplab/matrix.hpp"
#include "omplab/model.hpp"
#include "omplab/rip.hpp"

namespace omplab {

// Everything measured about the tight (K+1)x(K+1) construction on which the
// first greedy selection is a K+1-way tie.
struct CounterexampleReport {
    int k = 0;
    double delta_measured = 0.0;
    double delta_analytic = 0.0;              // 1 / sqrt(k)
    std::vector<double> spectrum;             // eigenvalues of A^T A, ascending
    std::vector<double> correlations_at_y;    // first-iteration correlations
    std::vector<std::string> omp_failed_under; // policy names that fail
    bool omp_first_pick_tie = false;
};

// (K+1)x(K+1) matrix: first K columns are standard basis vectors, the last
// column has 1/K in the first K coordinates and sqrt((K-1)/K) in the last.
DenseMatrix build_matrix(int k);

// (1, 1, ..., 1, 0) of length K+1, supported on the first K coordinates.
SparseSignal build_signal(int k);

// Eigenvalues {1 - 1/sqrt(K), 1 (K-1 times), 1 + 1/sqrt(K)}, ascending.
std::vector<double> analytic_spectrum(int k);

// Measures delta and the spectrum, evaluates the first-iteration correlation
// profile of y = A x, and runs recovery under all three tie-break policies.
CounterexampleReport verify_counterexample(int k, long long budget = kDefaultSubsetBudget);

} // namespace omplab
