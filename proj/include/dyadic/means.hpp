#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dyadic/group.hpp"

namespace dyadic {

/// (C, alpha) mean of order n: synthesis of the Walsh coefficients scaled by
/// A_{n-1-j}^alpha / A_n^alpha for j < n. Linear in f and annihilates any
/// function whose spectrum vanishes below n. alpha in (0, 1], 1 <= n <= 2^M.
DyadicFunction cesaro_mean(double alpha, const DyadicFunction& f, std::uint64_t n);

/// Streaming evaluation of the (C, alpha) means for n = n_lo..n_hi after a
/// single analysis pass. Each mean is produced at its coarsest exact rank
/// r = prefix_rank(n) and handed to the visitor as 2^r values indexed by the
/// low r bits of a slot.
void sweep_cesaro_means(
    double alpha, const DyadicFunction& f, std::uint64_t n_lo, std::uint64_t n_hi,
    const std::function<void(std::uint64_t n, int rank, std::span<const double>)>& visit);

/// The means sigma_n^alpha f for n = 1..max_order, retained as functions or
/// reduced to integrals of |.|^p per the storage policy.
class MeanSweep {
public:
    MeanSweep(double alpha, std::uint64_t max_order, std::vector<DyadicFunction> functions,
              std::vector<double> quasinorm_powers, std::optional<double> norm_exponent);

    double alpha() const { return alpha_; }
    std::uint64_t max_order() const { return max_order_; }
    bool stores_functions() const { return !functions_.empty(); }

    /// sigma_n^alpha f at full resolution, 1-based order.
    const DyadicFunction& mean(std::uint64_t n) const;

    /// integral of |sigma_n^alpha f|^p for the configured exponent p.
    double quasinorm_power(std::uint64_t n) const;

private:
    double alpha_;
    std::uint64_t max_order_;
    std::vector<DyadicFunction> functions_;
    std::vector<double> quasinorm_powers_;
    std::optional<double> norm_exponent_;
};

/// All means up to max_order. Functions are stored for resolutions up to 12;
/// above that each mean is reduced immediately to the requested norm power.
MeanSweep mean_sweep(double alpha, const DyadicFunction& f, std::uint64_t max_order,
                     std::optional<double> norm_exponent = std::nullopt);

/// Slotwise maximum of |sigma_n^alpha f| over n = 1..max_order.
DyadicFunction maximal_operator(double alpha, const DyadicFunction& f, std::uint64_t max_order);

/// Slotwise maximum of |sigma_n^alpha f| / (log n)^{1+alpha} over
/// n = 2..max_order, natural logarithm. Requires max_order >= 2.
DyadicFunction weighted_maximal_operator(double alpha, const DyadicFunction& f,
                                         std::uint64_t max_order);

/// Slotwise maximum of weight(n) * |sigma_n^alpha f| over n in [n_lo, n_hi].
DyadicFunction weighted_maximal_range(double alpha, const DyadicFunction& f, std::uint64_t n_lo,
                                      std::uint64_t n_hi,
                                      const std::function<double(std::uint64_t)>& weight);

}  // namespace dyadic
