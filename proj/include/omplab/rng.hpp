#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "omplab/matrix.hpp"
#include "omplab/model.hpp"

namespace omplab {

// SplitMix64 step; also used to derive per-trial seeds from a master seed.
std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256++ with SplitMix64 seeding. The integer stream is bit-exact on
// every platform; uniform doubles take the top 53 bits, Gaussians come from
// the Box-Muller transform (see README for the exact mappings).
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed);

    std::uint64_t next();
    double uniform01();                     // [0, 1)
    double gaussian();                      // standard normal
    std::uint64_t below(std::uint64_t bound); // uniform in [0, bound)

private:
    std::array<std::uint64_t, 4> state_{};
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

enum class Ensemble { GaussianUnitColumns, GaussianRaw };

const char* ensemble_name(Ensemble e);
// Accepts both the long JSON names and the CLI short names ("unit", "raw").
Ensemble parse_ensemble(const std::string& name);

// m x n matrix with i.i.d. standard normal entries drawn column by column;
// GaussianUnitColumns rescales each column to unit l2 norm.
DenseMatrix random_matrix(int m, int n, Ensemble ensemble, Xoshiro256pp& rng);

// Uniformly random k-subset of {0,...,n-1} by partial Fisher-Yates.
Support random_support(int n, int k, Xoshiro256pp& rng);

enum class SignalPattern { AllOnes, Gaussian, Alternating };

// Signal supported exactly on `support`: all ones, standard normal
// coefficients (redrawn if negligible), or alternating +1/-1.
SparseSignal make_signal(int n, const Support& support, SignalPattern pattern,
                         Xoshiro256pp& rng);

} // namespace omplab
