#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dyadic/group.hpp"

namespace dyadic {

/// Walsh coefficients of a resolution-M function, slot k holding the
/// coefficient of the k-th Walsh function in Paley ordering (binary digits
/// of k select Rademacher factors, digit 0 = coordinate 0).
class WalshSpectrum {
public:
    WalshSpectrum(int resolution, std::vector<double> coefficients);

    int resolution() const { return resolution_; }
    std::size_t size() const { return coefficients_.size(); }
    double operator[](std::size_t k) const { return coefficients_[k]; }
    std::span<const double> coefficients() const { return coefficients_; }

private:
    int resolution_;
    std::vector<double> coefficients_;
};

/// r_k(x) = (-1)^{x_k}. Requires k < x.resolution().
double rademacher(int k, const GroupPoint& x);

/// w_n(x) = product of r_k(x) over the set bits of n, i.e. the parity of
/// popcount(n & index). Requires n < 2^resolution.
double walsh(std::uint64_t n, const GroupPoint& x);

/// Unnormalized in-place butterfly. Stage h pairs slots differing in the
/// bit of weight h, mapping (a, b) to (a + b, a - b); after all stages
/// slot k holds sum_i data[i] * (-1)^popcount(k & i), which is the Paley
/// ordering under the global bit convention. Applying it twice multiplies
/// by the transform size. Exact on integer-valued input.
void fwht_inplace(std::span<double> data);
void fwht_inplace(std::span<std::int64_t> data);

/// Analysis: coefficients 2^-M sum_i f(i) w_k(i), one butterfly pass.
/// Bit-exact equal to the naive quadratic summation on dyadic-rational
/// input. The 2^-M factor lives here; synthesis carries none.
WalshSpectrum fwht(const DyadicFunction& f);

/// Synthesis: f(x) = sum_k c_k w_k(x). Inverse of fwht.
DyadicFunction synthesize(const WalshSpectrum& spectrum);

/// Partial sum of the first n Walsh terms; n = 0 gives the zero function,
/// n = 2^M reproduces f exactly at resolution M.
DyadicFunction partial_sum(const WalshSpectrum& spectrum, std::uint64_t n);

/// Arithmetic mean of the partial sums S_1..S_n, computed as synthesis
/// with triangular coefficient weights (1 - k/n). Requires n >= 1.
DyadicFunction fejer_mean(const WalshSpectrum& spectrum, std::uint64_t n);

/// Rank below which a function synthesized from the first n coefficients is
/// constant on cosets: ceil(log2 n).
int prefix_rank(std::uint64_t n);

/// Synthesis of the first n coefficients at the coarsest exact rank r =
/// prefix_rank(n): returns 2^r values indexed by the low r bits of a slot.
/// Expanding value[i & (2^r - 1)] over any finer resolution is exact.
std::vector<double> synthesize_prefix(std::span<const double> coefficients, std::uint64_t n);

}  // namespace dyadic
