#include "omplab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace omplab {

DenseMatrix gram(const DenseMatrix& a)
{
    if (a.empty())
        throw std::invalid_argument("gram: empty matrix");
    const int n = a.cols();
    DenseMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int r = 0; r < a.rows(); ++r)
                s += a(r, i) * a(r, j);
            g(i, j) = s;
            g(j, i) = s;
        }
    }
    return g;
}

namespace {

double off_diagonal_norm(const std::vector<double>& m, int n)
{
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                s += m[static_cast<std::size_t>(i) * n + j] * m[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(s);
}

} // namespace

std::vector<double> sym_eigenvalues(const DenseMatrix& g)
{
    if (g.rows() != g.cols())
        throw std::invalid_argument("sym_eigenvalues: matrix not square");
    const int n = g.rows();
    const double fro = g.frobenius_norm();

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(g(i, j) - g(j, i)) > kSymmetryRelTol * fro)
                throw NotSymmetricError("sym_eigenvalues: matrix not symmetric");

    std::vector<double> a(g.entries());
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    const double target = kJacobiOffRelTol * fro;

    for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a, n) <= target) {
            std::vector<double> eig(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                eig[static_cast<std::size_t>(i)] = at(i, i);
            std::sort(eig.begin(), eig.end());
            return eig;
        }
        if (sweep == kJacobiMaxSweeps)
            break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150)
                    t = 1.0 / (2.0 * theta);
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = at(p, p);
                const double aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q)
                        continue;
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = arp - s * (arq + tau * arp);
                    at(p, r) = at(r, p);
                    at(r, q) = arq + s * (arp - tau * arq);
                    at(q, r) = at(r, q);
                }
            }
        }
    }
    throw NoConvergenceError("sym_eigenvalues: no convergence within sweep limit");
}

LstsqResult least_squares(const DenseMatrix& a, const std::vector<double>& y)
{
    const int m = a.rows();
    const int k = a.cols();
    if (m < k)
        throw std::invalid_argument("least_squares: fewer rows than columns");
    if (static_cast<int>(y.size()) != m)
        throw std::invalid_argument("least_squares: right-hand side length mismatch");

    std::vector<double> r(a.entries());
    std::vector<double> b(y);
    auto at = [&](int i, int j) -> double& { return r[static_cast<std::size_t>(i) * k + j]; };

    std::vector<double> v(static_cast<std::size_t>(m));
    for (int j = 0; j < k; ++j) {
        double colnorm2 = 0.0;
        for (int i = j; i < m; ++i)
            colnorm2 += at(i, j) * at(i, j);
        const double colnorm = std::sqrt(colnorm2);
        if (colnorm == 0.0)
            continue;

        const double x0 = at(j, j);
        const double alpha = x0 > 0.0 ? -colnorm : colnorm;
        v[static_cast<std::size_t>(j)] = x0 - alpha;
        for (int i = j + 1; i < m; ++i)
            v[static_cast<std::size_t>(i)] = at(i, j);
        double vnorm2 = 0.0;
        for (int i = j; i < m; ++i)
            vnorm2 += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        at(j, j) = alpha;
        for (int i = j + 1; i < m; ++i)
            at(i, j) = 0.0;
        if (vnorm2 == 0.0)
            continue;

        for (int l = j + 1; l < k; ++l) {
            double proj = 0.0;
            for (int i = j; i < m; ++i)
                proj += v[static_cast<std::size_t>(i)] * at(i, l);
            const double f = 2.0 * proj / vnorm2;
            for (int i = j; i < m; ++i)
                at(i, l) -= f * v[static_cast<std::size_t>(i)];
        }
        double proj = 0.0;
        for (int i = j; i < m; ++i)
            proj += v[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
        const double f = 2.0 * proj / vnorm2;
        for (int i = j; i < m; ++i)
            b[static_cast<std::size_t>(i)] -= f * v[static_cast<std::size_t>(i)];
    }

    double max_diag = 0.0;
    for (int j = 0; j < k; ++j)
        max_diag = std::max(max_diag, std::abs(at(j, j)));

    LstsqResult result;
    result.solution.assign(static_cast<std::size_t>(k), 0.0);
    if (max_diag == 0.0) {
        result.rank_deficient = true;
        return result;
    }
    const double threshold = kQrTruncationRelTol * max_diag;
    for (int j = k - 1; j >= 0; --j) {
        if (std::abs(at(j, j)) < threshold) {
            result.solution[static_cast<std::size_t>(j)] = 0.0;
            result.rank_deficient = true;
            continue;
        }
        double s = b[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < k; ++l)
            s -= at(j, l) * result.solution[static_cast<std::size_t>(l)];
        result.solution[static_cast<std::size_t>(j)] = s / at(j, j);
    }
    return result;
}

} // namespace omplab
