#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/phi.hpp"
#include "dyadic/report.hpp"

namespace dyadic {

/// Exact closed-form checks for the dyadic Dirichlet and Fejer kernels plus
/// the per-order majorization scan of the (C, alpha) kernel.
struct KernelsParams {
    double alpha = 0.5;
    int resolution = 8;
    std::uint64_t n_max = 256;
};
ExperimentReport run_kernels(const KernelsParams& params);

/// L1 norms of K_n^alpha for n = 1..n_max with a bounded-tail verdict:
/// the maximum over the top three quarters of the range must not exceed
/// tail_ratio_limit times the maximum over the first quarter.
struct L1NormsParams {
    double alpha = 0.5;
    int resolution = 12;
    std::uint64_t n_max = 4096;
    double tail_ratio_limit = 1.05;
};
ExperimentReport run_l1norms(const L1NormsParams& params);

/// Integrals of the translated (C, alpha) kernel over I_M, classified by the
/// complement-partition coset of the translation argument and compared to
/// the per-coset bound shapes 2^{alpha l + k} / (n^alpha 2^M) and 2^k / 2^M.
/// Probes n range over (2^M, 2^{M'}] at working resolution M' = M + offset.
struct CosetBoundsParams {
    double alpha = 0.5;
    int resolution = 4;
    int working_offset = 2;
    int probe_count = 8;
};
ExperimentReport run_coset_bounds(const CosetBoundsParams& params);

/// Random-atom ensemble: pointwise bounds on sigma_n^alpha a over the
/// support complement for n > 2^M, with shapes 2^{alpha l + k} 2^{alpha M} /
/// n^alpha and 2^{alpha M + k}, plus the integral of the log-weighted
/// maximal function over the complement. Atom exponent is 1/(1+alpha).
struct AtomBoundsParams {
    double alpha = 0.5;
    int resolution = 4;         // atom support rank
    std::uint64_t n_max = 64;   // must exceed 2^resolution
    int seeds = 100;
    std::uint64_t seed_base = 0;
    int work_resolution = 0;    // 0: derived from n_max
    double uniformity_limit = 2.0;
};
ExperimentReport run_atom_bounds(const AtomBoundsParams& params);

/// Dirichlet-difference counterexample family: exact partial-sum case split
/// and frequency-shift identity, band lower bounds at the probe orders, the
/// H-quasinorm decay slope, and the phi-weighted divergence statistic.
struct CounterexampleParams {
    double alpha = 0.5;
    std::vector<int> nk_list = {1, 2, 3};
    PhiSchedule phi = PhiSchedule::log_power(1.0);
    double band_spread_limit = 2.0;
    double slope_tolerance = 0.10;
};
ExperimentReport run_counterexample(const CounterexampleParams& params);

/// Logarithmic strong sum (1/log n) sum_m ||sigma_m^alpha a||^p / m over
/// random-atom ensembles, with a plateau verdict on the running statistic.
/// alpha in (0, 1]; p = 1/(1+alpha).
struct StrongSumParams {
    double alpha = 0.5;
    std::vector<int> resolutions = {3, 4, 5};  // atom support ranks
    std::uint64_t n_max = 512;
    int seeds = 50;
    std::uint64_t seed_base = 0;
    double plateau_limit = 1.2;
    double uniformity_limit = 2.0;
};
ExperimentReport run_strong_sum(const StrongSumParams& params);

}  // namespace dyadic
