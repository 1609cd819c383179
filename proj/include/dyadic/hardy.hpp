#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/group.hpp"

namespace dyadic {

/// Average of f over each rank-n coset; idempotent, with level M the
/// identity and level 0 the constant at the mean. Requires n <= M.
DyadicFunction conditional_expectation(const DyadicFunction& f, int n);

/// Slotwise maximum of |E_n f| over n = 0..M.
DyadicFunction maximal_function(const DyadicFunction& f);

/// Dyadic martingale at finite resolution: levels F_0..F_M, level n constant
/// on rank-n cosets.
class FiniteMartingale {
public:
    explicit FiniteMartingale(std::vector<DyadicFunction> levels);

    /// Regular martingale of f: F_n = E_n f.
    static FiniteMartingale from_function(const DyadicFunction& f);

    int resolution() const { return resolution_; }
    const DyadicFunction& level(int n) const;

    /// Slotwise maximum of |F_n| over all levels.
    DyadicFunction maximal() const;

private:
    int resolution_;
    std::vector<DyadicFunction> levels_;
};

/// (integral of |f|^p)^{1/p}, p > 0. A norm for p >= 1, a quasinorm below.
double lp_quasinorm(const DyadicFunction& f, double p);

/// sup over lambda of lambda * mu(|f| > lambda)^{1/p}; attained at a value
/// boundary of the finitely-valued f.
double weak_lp_quasinorm(const DyadicFunction& f, double p);

/// L_p quasinorm of the martingale maximal function of f.
double hp_quasinorm(const DyadicFunction& f, double p);

/// Candidate p-atom: mean zero on the support interval, sup norm at most
/// mu(support)^{-1/p}, vanishing outside the support.
struct AtomSpec {
    double p;
    DyadicInterval support;
    DyadicFunction values;
};

struct AtomValidation {
    bool passed;
    double mean_abs;                   // |integral over the support|
    double sup_norm;                   // max |a|
    double sup_bound;                  // mu(support)^{-1/p}
    std::uint64_t outside_violations;  // nonzero slots outside the support
};

/// Checks the three atom conditions and reports how far each is off.
/// Mean tolerance 1e-12 absolute; the sup bound allows 1e-12 relative slack.
AtomValidation validate_atom(const AtomSpec& atom);

/// Deterministic pseudo-random p-atom supported on the anchored interval of
/// the given rank. Values are centered exactly (integer arithmetic) and the
/// scale is a dyadic rational, so the Walsh coefficients below 2^rank vanish
/// exactly at desk-scale resolutions; the sup norm saturates a uniformly
/// drawn fraction in (1/2, 1] of the admissible bound.
AtomSpec random_atom(double p, int support_rank, int resolution, std::uint64_t seed);

/// Difference of consecutive dyadic-order Dirichlet kernels,
/// f = D_{2^{2nk+1}} - D_{2^{2nk}}, together with the probe orders
/// q_s = 2^{2nk} + 2^{2s}, s = 0..nk-1. The function equals 2^{2nk} on
/// I_{2nk+1}, -2^{2nk} on I_{2nk} minus I_{2nk+1}, 0 elsewhere, and its
/// spectrum is the indicator of [2^{2nk}, 2^{2nk+1}). Both representations
/// are built and checked against each other exactly.
struct CounterexampleSpec {
    double alpha;
    int nk;
    int resolution;
    DyadicFunction function;
    std::vector<std::uint64_t> probe_orders;
};

CounterexampleSpec counterexample(double alpha, int nk, int resolution);

}  // namespace dyadic
