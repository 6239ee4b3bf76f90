#pragma once

#include <stdexcept>
#include <vector>

#include "omplab/matrix.hpp"

namespace omplab {

struct NotSymmetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symmetry check for sym_eigenvalues, relative to the Frobenius norm.
inline constexpr double kSymmetryRelTol = 1e-12;

// Jacobi sweep loop: stop once the off-diagonal Frobenius mass falls below
// kJacobiOffRelTol * ||G||_F, give up after kJacobiMaxSweeps sweeps.
inline constexpr double kJacobiOffRelTol = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

// Diagonal entries of R below kQrTruncationRelTol times the largest diagonal
// magnitude are treated as zero during the back substitution.
inline constexpr double kQrTruncationRelTol = 1e-12;

// Column Gram matrix A^T A, built one unordered column pair at a time so the
// result is symmetric to the bit.
DenseMatrix gram(const DenseMatrix& a);

// All eigenvalues of a symmetric matrix in nondecreasing order, by cyclic
// Jacobi rotations. Throws NotSymmetricError / NoConvergenceError.
std::vector<double> sym_eigenvalues(const DenseMatrix& g);

struct LstsqResult {
    std::vector<double> solution;
    // true when at least one coefficient was zeroed by the diagonal threshold
    bool rank_deficient = false;
};

// Minimizer of ||A z - y||_2 via Householder QR, rows >= cols. Near-zero
// diagonal entries of R are truncated rather than divided by.
LstsqResult least_squares(const DenseMatrix& a, const std::vector<double>& y);

} // namespace omplab
