#include "dyadic/hardy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <span>
#include <string>

#include "dyadic/transform.hpp"

namespace dyadic {

DyadicFunction conditional_expectation(const DyadicFunction& f, int n) {
    const int M = f.resolution();
    if (n < 0 || n > M) {
        throw ResolutionError("conditioning level " + std::to_string(n) +
                              " out of range for resolution " + std::to_string(M));
    }
    const std::size_t cosets = std::size_t{1} << n;
    const std::size_t per_coset = std::size_t{1} << (M - n);
    std::vector<double> out(f.size());
    for (std::size_t id = 0; id < cosets; ++id) {
        double sum = 0.0;
        for (std::size_t m = 0; m < per_coset; ++m) {
            sum += f[id + (m << n)];
        }
        const double avg = std::ldexp(sum, n - M);
        for (std::size_t m = 0; m < per_coset; ++m) {
            out[id + (m << n)] = avg;
        }
    }
    return DyadicFunction(M, std::move(out));
}

DyadicFunction maximal_function(const DyadicFunction& f) {
    const int M = f.resolution();
    std::vector<double> best(f.size(), 0.0);
    for (int n = 0; n <= M; ++n) {
        const DyadicFunction level = conditional_expectation(f, n);
        for (std::size_t i = 0; i < best.size(); ++i) {
            best[i] = std::max(best[i], std::abs(level[i]));
        }
    }
    return DyadicFunction(M, std::move(best));
}

FiniteMartingale::FiniteMartingale(std::vector<DyadicFunction> levels)
    : resolution_(levels.empty() ? 0 : levels.front().resolution()), levels_(std::move(levels)) {
    if (levels_.size() != static_cast<std::size_t>(resolution_) + 1) {
        throw ResolutionError("martingale needs levels 0..M");
    }
    for (int n = 0; n <= resolution_; ++n) {
        const DyadicFunction& level = levels_[n];
        if (level.resolution() != resolution_) {
            throw ResolutionError("martingale level resolution mismatch");
        }
        // F_n must be constant on rank-n cosets.
        const std::size_t stride = std::size_t{1} << n;
        for (std::size_t i = stride; i < level.size(); ++i) {
            if (level[i] != level[i & (stride - 1)]) {
                throw ParameterError("martingale level " + std::to_string(n) +
                                     " is not measurable at its rank");
            }
        }
    }
}

FiniteMartingale FiniteMartingale::from_function(const DyadicFunction& f) {
    std::vector<DyadicFunction> levels;
    levels.reserve(f.resolution() + 1);
    for (int n = 0; n <= f.resolution(); ++n) {
        levels.push_back(conditional_expectation(f, n));
    }
    return FiniteMartingale(std::move(levels));
}

const DyadicFunction& FiniteMartingale::level(int n) const {
    if (n < 0 || n > resolution_) {
        throw ResolutionError("martingale level out of range");
    }
    return levels_[n];
}

DyadicFunction FiniteMartingale::maximal() const {
    std::vector<double> best(levels_.front().size(), 0.0);
    for (const DyadicFunction& level : levels_) {
        for (std::size_t i = 0; i < best.size(); ++i) {
            best[i] = std::max(best[i], std::abs(level[i]));
        }
    }
    return DyadicFunction(resolution_, std::move(best));
}

namespace {

void check_exponent(double p) {
    if (!(p > 0.0)) {
        throw ParameterError("quasinorm exponent must be positive");
    }
}

}  // namespace

double lp_quasinorm(const DyadicFunction& f, double p) {
    check_exponent(p);
    double sum = 0.0;
    for (double v : f.values()) sum += std::pow(std::abs(v), p);
    return std::pow(std::ldexp(sum, -f.resolution()), 1.0 / p);
}

double weak_lp_quasinorm(const DyadicFunction& f, double p) {
    check_exponent(p);
    std::vector<double> mags(f.values().begin(), f.values().end());
    for (double& v : mags) v = std::abs(v);
    std::sort(mags.begin(), mags.end(), std::greater<>());
    double best = 0.0;
    std::size_t at_least = 0;
    for (std::size_t i = 0; i < mags.size(); ++i) {
        ++at_least;  // slots with |f| >= mags[i]
        if (i + 1 < mags.size() && mags[i + 1] == mags[i]) continue;
        if (mags[i] == 0.0) break;
        const double mass = std::ldexp(static_cast<double>(at_least), -f.resolution());
        best = std::max(best, mags[i] * std::pow(mass, 1.0 / p));
    }
    return best;
}

double hp_quasinorm(const DyadicFunction& f, double p) {
    return lp_quasinorm(maximal_function(f), p);
}

AtomValidation validate_atom(const AtomSpec& atom) {
    check_exponent(atom.p);
    if (atom.p > 1.0) {
        throw ParameterError("atom exponent must lie in (0, 1]");
    }
    const DyadicFunction& a = atom.values;
    const double mean_abs = std::abs(a.integral_over(atom.support));
    double sup_norm = 0.0;
    for (double v : a.values()) sup_norm = std::max(sup_norm, std::abs(v));
    const double sup_bound = std::pow(atom.support.measure(), -1.0 / atom.p);

    std::uint64_t outside = 0;
    const int rank = atom.support.rank();
    const std::uint32_t mask = (rank == 0) ? 0u : ((std::uint32_t{1} << rank) - 1u);
    const std::uint32_t low = atom.support.base().index() & mask;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((static_cast<std::uint32_t>(i) & mask) != low && a[i] != 0.0) ++outside;
    }

    AtomValidation result{};
    result.mean_abs = mean_abs;
    result.sup_norm = sup_norm;
    result.sup_bound = sup_bound;
    result.outside_violations = outside;
    result.passed =
        mean_abs <= 1e-12 && sup_norm <= sup_bound * (1.0 + 1e-12) && outside == 0;
    return result;
}

AtomSpec random_atom(double p, int support_rank, int resolution, std::uint64_t seed) {
    check_exponent(p);
    if (p > 1.0) {
        throw ParameterError("atom exponent must lie in (0, 1]");
    }
    check_resolution(resolution);
    if (support_rank < 0 || support_rank > resolution) {
        throw ResolutionError("atom support rank out of range");
    }
    const DyadicInterval support = DyadicInterval::anchored(support_rank, resolution);
    const int free_bits = resolution - support_rank;
    const std::size_t count = std::size_t{1} << free_bits;

    // Bit budget keeping every intermediate of the analysis butterfly an
    // exact integer multiple of the dyadic scale: values use value_bits,
    // centering adds free_bits + 1, the scale mantissa multiplier adds
    // scale_bits, and butterfly sums add at most free_bits more.
    const int avail = 52 - 2 * free_bits - 1;
    const int scale_bits = std::clamp(avail / 2, 1, 21);
    const int value_bits = std::clamp(avail - scale_bits, 1, 20);

    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> raw(count);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t word = rng();
        raw[i] = static_cast<std::int64_t>(word & ((std::uint64_t{1} << (value_bits + 1)) - 1)) -
                 (std::int64_t{1} << value_bits);
        total += raw[i];
    }
    // Exact centering: k_i = count * v_i - total sums to zero in integers.
    std::int64_t max_abs = 0;
    for (std::size_t i = 0; i < count; ++i) {
        raw[i] = static_cast<std::int64_t>(count) * raw[i] - total;
        max_abs = std::max(max_abs, std::abs(raw[i]));
    }

    std::vector<double> values(slot_count(resolution), 0.0);
    if (max_abs > 0) {
        const double fraction =
            0.5 + 0.5 * std::ldexp(static_cast<double>((rng() >> 11) + 1), -53);
        const double bound = std::pow(2.0, static_cast<double>(support_rank) / p);
        const double wanted = fraction * bound / static_cast<double>(max_abs);
        // Dyadic-rational scale just below the target: scale_bits mantissa
        // bits, arbitrary power-of-two exponent.
        const int shift = std::ilogb(wanted) - (scale_bits - 1);
        const auto mantissa = static_cast<std::int64_t>(std::floor(std::ldexp(wanted, -shift)));
        for (std::size_t m = 0; m < count; ++m) {
            values[m << support_rank] = std::ldexp(static_cast<double>(raw[m] * mantissa), shift);
        }
    }
    return AtomSpec{p, support, DyadicFunction(resolution, std::move(values))};
}

CounterexampleSpec counterexample(double alpha, int nk, int resolution) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw ParameterError("alpha must lie in (0, 1]");
    }
    if (nk < 1) {
        throw ParameterError("counterexample index must be positive");
    }
    check_resolution(resolution);
    if (resolution < 2 * nk + 1) {
        throw ResolutionError("counterexample needs resolution >= " + std::to_string(2 * nk + 1));
    }
    const std::uint64_t lo = std::uint64_t{1} << (2 * nk);
    const std::uint64_t hi = std::uint64_t{1} << (2 * nk + 1);

    // Spectral route: indicator coefficients on [lo, hi).
    std::vector<std::int64_t> synth(slot_count(resolution), 0);
    for (std::uint64_t j = lo; j < hi; ++j) synth[j] = 1;
    fwht_inplace(std::span<std::int64_t>(synth));

    // Pointwise route from the dyadic Dirichlet closed form.
    const std::uint64_t mask_lo = lo - 1;      // low 2nk bits
    const std::uint64_t mask_hi = hi - 1;      // low 2nk+1 bits
    std::vector<double> values(slot_count(resolution), 0.0);
    const auto magnitude = static_cast<double>(lo);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if ((i & mask_hi) == 0) {
            values[i] = magnitude;
        } else if ((i & mask_lo) == 0) {
            values[i] = -magnitude;
        }
        if (values[i] != static_cast<double>(synth[i])) {
            throw std::logic_error("counterexample representations disagree");
        }
    }

    std::vector<std::uint64_t> probes;
    probes.reserve(nk);
    for (int s = 0; s < nk; ++s) {
        probes.push_back(lo + (std::uint64_t{1} << (2 * s)));
    }
    return CounterexampleSpec{alpha, nk, resolution, DyadicFunction(resolution, std::move(values)),
                              std::move(probes)};
}

}  // namespace dyadic
