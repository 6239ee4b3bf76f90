#include "omplab/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace omplab {

namespace {

void check_dims(int rows, int cols)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("matrix dimensions must be positive");
}

} // namespace

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    check_dims(rows, cols);
    entries_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    check_dims(rows, cols);
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match rows * cols");
    if (!all_finite(entries_))
        throw std::invalid_argument("matrix entries must be finite");
}

DenseMatrix DenseMatrix::identity(int n)
{
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

std::vector<double> DenseMatrix::column(int j) const
{
    if (j < 0 || j >= cols_)
        throw std::out_of_range("column index out of range");
    std::vector<double> c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return c;
}

DenseMatrix DenseMatrix::select_columns(const std::vector<int>& indices) const
{
    if (indices.empty())
        throw std::invalid_argument("select_columns needs at least one index");
    DenseMatrix out(rows_, static_cast<int>(indices.size()));
    for (std::size_t k = 0; k < indices.size(); ++k) {
        const int j = indices[k];
        if (j < 0 || j >= cols_)
            throw std::out_of_range("column index out of range");
        for (int i = 0; i < rows_; ++i)
            out(i, static_cast<int>(k)) = (*this)(i, j);
    }
    return out;
}

DenseMatrix DenseMatrix::principal_submatrix(const std::vector<int>& indices) const
{
    if (rows_ != cols_)
        throw std::invalid_argument("principal_submatrix needs a square matrix");
    if (indices.empty())
        throw std::invalid_argument("principal_submatrix needs at least one index");
    const int k = static_cast<int>(indices.size());
    DenseMatrix out(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            const int i = indices[static_cast<std::size_t>(a)];
            const int j = indices[static_cast<std::size_t>(b)];
            if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
                throw std::out_of_range("submatrix index out of range");
            out(a, b) = (*this)(i, j);
        }
    return out;
}

double DenseMatrix::frobenius_norm() const
{
    double s = 0.0;
    for (double v : entries_)
        s += v * v;
    return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& v)
{
    double s = 0.0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

double norm1(const std::vector<double>& v)
{
    double s = 0.0;
    for (double x : v)
        s += std::abs(x);
    return s;
}

bool all_finite(const std::vector<double>& v)
{
    for (double x : v)
        if (!std::isfinite(x))
            return false;
    return true;
}

} // namespace omplab
