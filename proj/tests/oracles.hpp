#pragma once

// Independent oracles for the test suites. Everything here recomputes results
// from first principles (naive loops, closed-form eigenvalues, Gaussian
// elimination) so that agreement with the library is meaningful evidence, not
// the same code called twice. Accumulation orders are deliberately different
// from the library's where it matters.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "omplab/matrix.hpp"

namespace oracles {

inline double naive_dot(const std::vector<double>& a, const std::vector<double>& b)
{
    // Reverse-order accumulation, unlike the library's forward loops.
    double s = 0.0;
    for (std::size_t i = a.size(); i-- > 0;)
        s += a[i] * b[i];
    return s;
}

inline std::vector<double> naive_matvec(const omplab::DenseMatrix& a,
                                        const std::vector<double>& x)
{
    std::vector<double> y(static_cast<std::size_t>(a.rows()), 0.0);
    for (int j = a.cols() - 1; j >= 0; --j)
        for (int i = 0; i < a.rows(); ++i)
            y[static_cast<std::size_t>(i)] += a(i, j) * x[static_cast<std::size_t>(j)];
    return y;
}

inline double naive_gram_entry(const omplab::DenseMatrix& a, int i, int j)
{
    return naive_dot(a.column(i), a.column(j));
}

// Eigenvalues of the symmetric 2x2 matrix [[a, b], [b, c]] by the quadratic
// formula, ascending.
inline std::vector<double> eig2x2(double a, double b, double c)
{
    const double mean = 0.5 * (a + c);
    const double disc = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    return {mean - disc, mean + disc};
}

// Eigenvalues of a symmetric 3x3 matrix by the trigonometric closed form,
// ascending.
inline std::vector<double> eig3x3(const omplab::DenseMatrix& g)
{
    if (g.rows() != 3 || g.cols() != 3)
        throw std::invalid_argument("eig3x3 wants a 3x3 matrix");
    const double p1 = g(0, 1) * g(0, 1) + g(0, 2) * g(0, 2) + g(1, 2) * g(1, 2);
    if (p1 == 0.0) {
        std::vector<double> d{g(0, 0), g(1, 1), g(2, 2)};
        std::sort(d.begin(), d.end());
        return d;
    }
    const double q = (g(0, 0) + g(1, 1) + g(2, 2)) / 3.0;
    const double p2 = (g(0, 0) - q) * (g(0, 0) - q) + (g(1, 1) - q) * (g(1, 1) - q) +
                      (g(2, 2) - q) * (g(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    // B = (G - q I) / p; r = det(B) / 2 lands in [-1, 1] up to rounding.
    const double b00 = (g(0, 0) - q) / p, b11 = (g(1, 1) - q) / p, b22 = (g(2, 2) - q) / p;
    const double b01 = g(0, 1) / p, b02 = g(0, 2) / p, b12 = g(1, 2) / p;
    double r = (b00 * (b11 * b22 - b12 * b12) - b01 * (b01 * b22 - b12 * b02) +
                b02 * (b01 * b12 - b11 * b02)) /
               2.0;
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double lo = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    const double hi = q + 2.0 * p * std::cos(phi);
    const double mid = 3.0 * q - lo - hi;
    return {lo, mid, hi};
}

// All k-subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline double deviation_from_one(const std::vector<double>& eigs)
{
    return std::max(eigs.back() - 1.0, 1.0 - eigs.front());
}

// Order-2 restricted isometry constant via the closed-form 2x2 eigenvalues of
// every pairwise Gram block.
inline double ric_order2(const omplab::DenseMatrix& a)
{
    double delta = -1.0;
    for (int i = 0; i < a.cols(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) {
            const auto eigs = eig2x2(naive_gram_entry(a, i, i), naive_gram_entry(a, i, j),
                                     naive_gram_entry(a, j, j));
            delta = std::max(delta, deviation_from_one(eigs));
        }
    return delta;
}

// Order-3 restricted isometry constant via the trigonometric 3x3 spectrum of
// every triple's Gram block.
inline double ric_order3(const omplab::DenseMatrix& a)
{
    double delta = -1.0;
    for (const auto& c : combinations(a.cols(), 3)) {
        omplab::DenseMatrix g(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                g(i, j) = naive_gram_entry(a, c[static_cast<std::size_t>(i)],
                                           c[static_cast<std::size_t>(j)]);
        delta = std::max(delta, deviation_from_one(eig3x3(g)));
    }
    return delta;
}

// Solves min ||A_sub c - y||_2 through the normal equations with Gaussian
// elimination and partial pivoting; fine at oracle sizes (k <= 8).
inline std::vector<double> normal_equation_solve(const omplab::DenseMatrix& a_sub,
                                                 const std::vector<double>& y)
{
    const int k = a_sub.cols();
    std::vector<double> g(static_cast<std::size_t>(k) * (k + 1));
    auto at = [&](int i, int j) -> double& { return g[static_cast<std::size_t>(i) * (k + 1) + j]; };
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            at(i, j) = naive_gram_entry(a_sub, i, j);
        at(i, k) = naive_dot(a_sub.column(i), y);
    }
    for (int col = 0; col < k; ++col) {
        int pivot = col;
        for (int i = col + 1; i < k; ++i)
            if (std::abs(at(i, col)) > std::abs(at(pivot, col)))
                pivot = i;
        if (at(pivot, col) == 0.0)
            throw std::runtime_error("normal_equation_solve: singular system");
        if (pivot != col)
            for (int j = col; j <= k; ++j)
                std::swap(at(pivot, j), at(col, j));
        for (int i = col + 1; i < k; ++i) {
            const double f = at(i, col) / at(col, col);
            for (int j = col; j <= k; ++j)
                at(i, j) -= f * at(col, j);
        }
    }
    std::vector<double> c(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        double s = at(i, k);
        for (int j = i + 1; j < k; ++j)
            s -= at(i, j) * c[static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(i)] = s / at(i, i);
    }
    return c;
}

// Residual norm of the best least-squares fit of y over the given columns.
inline double subset_residual_norm(const omplab::DenseMatrix& a, const std::vector<int>& subset,
                                   const std::vector<double>& y)
{
    const omplab::DenseMatrix a_sub = a.select_columns(subset);
    const std::vector<double> c = normal_equation_solve(a_sub, y);
    double s = 0.0;
    for (int i = 0; i < a_sub.rows(); ++i) {
        double fit = 0.0;
        for (int j = 0; j < a_sub.cols(); ++j)
            fit += a_sub(i, j) * c[static_cast<std::size_t>(j)];
        const double d = y[static_cast<std::size_t>(i)] - fit;
        s += d * d;
    }
    return std::sqrt(s);
}

// Exhaustive l0 search: every k-subset whose least-squares residual is at most
// rel_tol * ||y||_2. The search is the uniqueness certificate the equivalence
// tests rely on.
inline std::vector<std::vector<int>> l0_supports(const omplab::DenseMatrix& a, int k,
                                                 const std::vector<double>& y, double rel_tol)
{
    double ynorm2 = 0.0;
    for (double v : y)
        ynorm2 += v * v;
    const double bar = rel_tol * std::sqrt(ynorm2);
    std::vector<std::vector<int>> hits;
    for (const auto& c : combinations(a.cols(), k))
        if (subset_residual_norm(a, c, y) <= bar)
            hits.push_back(c);
    return hits;
}

} // namespace oracles
