#pragma once

#include <string>
#include <vector>

namespace omplab {

// Dense row-major matrix. Dimensions are fixed at construction and every
// entry must be finite; the constructors enforce both.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols);
    DenseMatrix(int rows, int cols, std::vector<double> entries);

    static DenseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }

    double operator()(int i, int j) const
    {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    double& operator()(int i, int j)
    {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<double>& entries() const { return entries_; }

    std::vector<double> column(int j) const;

    // New matrix keeping all rows and the listed columns, in the given order.
    DenseMatrix select_columns(const std::vector<int>& indices) const;

    // Square slice taking the listed rows and columns (Gram submatrices).
    DenseMatrix principal_submatrix(const std::vector<int>& indices) const;

    double frobenius_norm() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> entries_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& v);
double norm1(const std::vector<double>& v);
bool all_finite(const std::vector<double>& v);

} // namespace omplab
