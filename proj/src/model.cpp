#include "omplab/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace omplab {

Support Support::from_indices(std::vector<int> indices)
{
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0)
            throw std::invalid_argument("support index must be nonnegative");
        if (i > 0 && indices[i] == indices[i - 1])
            throw std::invalid_argument("support indices must be distinct");
    }
    Support s;
    s.indices_ = std::move(indices);
    return s;
}

bool Support::contains(int i) const
{
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

int Support::max_index() const
{
    return indices_.empty() ? -1 : indices_.back();
}

Support Support::with(int index) const
{
    if (contains(index))
        throw std::invalid_argument("index already in support");
    Support s;
    s.indices_ = indices_;
    s.indices_.insert(std::lower_bound(s.indices_.begin(), s.indices_.end(), index), index);
    return s;
}

SparseSignal SparseSignal::from_entries(std::vector<double> entries)
{
    if (entries.empty())
        throw std::invalid_argument("signal must have positive length");
    if (!all_finite(entries))
        throw std::invalid_argument("signal entries must be finite");
    std::vector<int> nonzero;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] != 0.0)
            nonzero.push_back(static_cast<int>(i));
    SparseSignal x;
    x.entries = std::move(entries);
    x.support = Support::from_indices(std::move(nonzero));
    return x;
}

double SparseSignal::norm1() const { return omplab::norm1(entries); }
double SparseSignal::norm2() const { return omplab::norm2(entries); }

std::vector<double> apply(const DenseMatrix& a, const std::vector<double>& x)
{
    if (static_cast<int>(x.size()) != a.cols())
        throw std::invalid_argument("apply: vector length does not match column count");
    std::vector<double> y(static_cast<std::size_t>(a.rows()), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j)
            s += a(i, j) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

CorrelationProfile correlations(const DenseMatrix& a, const std::vector<double>& v,
                                const Support& support)
{
    if (static_cast<int>(v.size()) != a.rows())
        throw std::invalid_argument("correlations: vector length does not match row count");
    if (support.max_index() >= a.cols())
        throw std::invalid_argument("correlations: support index out of range");

    CorrelationProfile profile;
    profile.values.assign(static_cast<std::size_t>(a.cols()), 0.0);
    for (int j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (int i = 0; i < a.rows(); ++i)
            s += a(i, j) * v[static_cast<std::size_t>(i)];
        profile.values[static_cast<std::size_t>(j)] = s;
    }

    profile.s0 = 0.0;
    for (int idx : support.indices())
        profile.s0 = std::max(profile.s0, std::abs(profile.values[static_cast<std::size_t>(idx)]));

    std::vector<int> argmax;
    for (int idx : support.indices())
        if (std::abs(profile.values[static_cast<std::size_t>(idx)]) == profile.s0)
            argmax.push_back(idx);
    profile.s0_argmax = Support::from_indices(std::move(argmax));
    return profile;
}

} // namespace omplab
