#include "omplab/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace omplab {

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

} // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed)
{
    std::uint64_t sm = seed;
    for (auto& word : state_)
        word = splitmix64(sm);
}

std::uint64_t Xoshiro256pp::next()
{
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Xoshiro256pp::uniform01()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Xoshiro256pp::gaussian()
{
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    double u1 = uniform01();
    while (u1 == 0.0)
        u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = radius * std::sin(angle);
    has_cached_gaussian_ = true;
    return radius * std::cos(angle);
}

std::uint64_t Xoshiro256pp::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("below: bound must be positive");
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
}

const char* ensemble_name(Ensemble e)
{
    switch (e) {
    case Ensemble::GaussianUnitColumns:
        return "GaussianUnitColumns";
    case Ensemble::GaussianRaw:
        return "GaussianRaw";
    }
    return "unknown";
}

Ensemble parse_ensemble(const std::string& name)
{
    if (name == "unit" || name == "GaussianUnitColumns")
        return Ensemble::GaussianUnitColumns;
    if (name == "raw" || name == "GaussianRaw")
        return Ensemble::GaussianRaw;
    throw std::invalid_argument("unknown ensemble '" + name + "'");
}

DenseMatrix random_matrix(int m, int n, Ensemble ensemble, Xoshiro256pp& rng)
{
    DenseMatrix a(m, n);
    for (int j = 0; j < n; ++j) {
        double norm = 0.0;
        do {
            double sq = 0.0;
            for (int i = 0; i < m; ++i) {
                const double v = rng.gaussian();
                a(i, j) = v;
                sq += v * v;
            }
            norm = std::sqrt(sq);
        } while (ensemble == Ensemble::GaussianUnitColumns && norm < 1e-12);
        if (ensemble == Ensemble::GaussianUnitColumns)
            for (int i = 0; i < m; ++i)
                a(i, j) /= norm;
    }
    return a;
}

Support random_support(int n, int k, Xoshiro256pp& rng)
{
    if (k < 1 || k > n)
        throw std::invalid_argument("random_support: need 1 <= k <= n");
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return Support::from_indices(std::move(pool));
}

SparseSignal make_signal(int n, const Support& support, SignalPattern pattern,
                         Xoshiro256pp& rng)
{
    if (support.empty() || support.max_index() >= n)
        throw std::invalid_argument("make_signal: support must be nonempty and within range");
    std::vector<double> entries(static_cast<std::size_t>(n), 0.0);
    int position = 0;
    for (int idx : support.indices()) {
        double value = 0.0;
        switch (pattern) {
        case SignalPattern::AllOnes:
            value = 1.0;
            break;
        case SignalPattern::Gaussian:
            do {
                value = rng.gaussian();
            } while (std::abs(value) < 1e-12);
            break;
        case SignalPattern::Alternating:
            value = (position % 2 == 0) ? 1.0 : -1.0;
            break;
        }
        entries[static_cast<std::size_t>(idx)] = value;
        ++position;
    }
    return SparseSignal::from_entries(std::move(entries));
}

} // namespace omplab
