#pragma once

#include <vector>

#include "omplab/matrix.hpp"

namespace omplab {

// Sorted set of distinct 0-based column indices.
class Support {
public:
    Support() = default;
    // Sorts and validates: indices must be distinct and nonnegative.
    static Support from_indices(std::vector<int> indices);

    const std::vector<int>& indices() const { return indices_; }
    int size() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }
    bool contains(int i) const;
    int max_index() const; // -1 when empty

    // Copy with one more index inserted; the index must not be present yet.
    Support with(int index) const;

    bool operator==(const Support&) const = default;

private:
    std::vector<int> indices_;
};

// Dense vector together with its exact nonzero support.
struct SparseSignal {
    std::vector<double> entries;
    Support support;

    static SparseSignal from_entries(std::vector<double> entries);

    int length() const { return static_cast<int>(entries.size()); }
    int sparsity() const { return support.size(); } // ||x||_0
    double norm1() const;
    double norm2() const;
};

// Per-column correlation values of some vector v against the columns of A,
// with the in-support maximum magnitude (S_0) tracked separately.
struct CorrelationProfile {
    std::vector<double> values;
    double s0 = 0.0;
    Support s0_argmax;
};

// y = A x
std::vector<double> apply(const DenseMatrix& a, const std::vector<double>& x);

// values[i] = <column i of A, v> for every column; s0 is the max magnitude
// over the declared support, s0_argmax the in-support indices attaining it.
CorrelationProfile correlations(const DenseMatrix& a, const std::vector<double>& v,
                                const Support& support);

} // namespace omplab
