#include "dyadic/means.hpp"

#include <cmath>
#include <string>

#include "dyadic/cesaro_numbers.hpp"
#include "dyadic/transform.hpp"

namespace dyadic {

namespace {

constexpr int kFunctionStorageCap = 12;

void check_mean_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw ParameterError("cesaro alpha must lie in (0, 1], got " + std::to_string(alpha));
    }
}

void check_mean_order(std::uint64_t n, int resolution) {
    if (n == 0) {
        throw ParameterError("mean order must be positive");
    }
    if (n > slot_count(resolution)) {
        throw ResolutionError("mean order " + std::to_string(n) + " above 2^" +
                              std::to_string(resolution));
    }
}

}  // namespace

DyadicFunction cesaro_mean(double alpha, const DyadicFunction& f, std::uint64_t n) {
    check_mean_alpha(alpha);
    check_mean_order(n, f.resolution());
    const WalshSpectrum spectrum = fwht(f);
    const CesaroWeights weights(alpha, n);
    std::vector<double> coeffs(f.size(), 0.0);
    for (std::uint64_t j = 0; j < n; ++j) {
        coeffs[j] = spectrum[j] * (weights[n - 1 - j] / weights[n]);
    }
    fwht_inplace(std::span<double>(coeffs));
    return DyadicFunction(f.resolution(), std::move(coeffs));
}

void sweep_cesaro_means(
    double alpha, const DyadicFunction& f, std::uint64_t n_lo, std::uint64_t n_hi,
    const std::function<void(std::uint64_t, int, std::span<const double>)>& visit) {
    check_mean_alpha(alpha);
    if (n_lo == 0 || n_lo > n_hi) {
        throw ParameterError("mean sweep range is empty");
    }
    check_mean_order(n_hi, f.resolution());
    const WalshSpectrum spectrum = fwht(f);
    const CesaroWeights weights(alpha, n_hi);
    std::vector<double> coeffs;
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        coeffs.assign(n, 0.0);
        for (std::uint64_t j = 0; j < n; ++j) {
            coeffs[j] = spectrum[j] * (weights[n - 1 - j] / weights[n]);
        }
        const std::vector<double> vals = synthesize_prefix(coeffs, n);
        visit(n, prefix_rank(n), vals);
    }
}

MeanSweep::MeanSweep(double alpha, std::uint64_t max_order, std::vector<DyadicFunction> functions,
                     std::vector<double> quasinorm_powers, std::optional<double> norm_exponent)
    : alpha_(alpha),
      max_order_(max_order),
      functions_(std::move(functions)),
      quasinorm_powers_(std::move(quasinorm_powers)),
      norm_exponent_(norm_exponent) {}

const DyadicFunction& MeanSweep::mean(std::uint64_t n) const {
    if (n == 0 || n > functions_.size()) {
        throw ParameterError("sweep does not store a mean of order " + std::to_string(n));
    }
    return functions_[n - 1];
}

double MeanSweep::quasinorm_power(std::uint64_t n) const {
    if (!norm_exponent_ || n == 0 || n > quasinorm_powers_.size()) {
        throw ParameterError("sweep does not store a norm of order " + std::to_string(n));
    }
    return quasinorm_powers_[n - 1];
}

MeanSweep mean_sweep(double alpha, const DyadicFunction& f, std::uint64_t max_order,
                     std::optional<double> norm_exponent) {
    const bool store_functions = f.resolution() <= kFunctionStorageCap;
    const std::size_t slots = f.size();
    std::vector<DyadicFunction> functions;
    std::vector<double> norm_powers;
    if (store_functions) functions.reserve(max_order);
    if (norm_exponent) norm_powers.reserve(max_order);
    sweep_cesaro_means(alpha, f, 1, max_order,
                       [&](std::uint64_t, int rank, std::span<const double> vals) {
                           if (store_functions) {
                               const std::size_t mask = vals.size() - 1;
                               std::vector<double> full(slots);
                               for (std::size_t i = 0; i < slots; ++i) full[i] = vals[i & mask];
                               functions.emplace_back(f.resolution(), std::move(full));
                           }
                           if (norm_exponent) {
                               double sum = 0.0;
                               for (double v : vals) sum += std::pow(std::abs(v), *norm_exponent);
                               norm_powers.push_back(std::ldexp(sum, -rank));
                           }
                       });
    return MeanSweep(alpha, max_order, std::move(functions), std::move(norm_powers), norm_exponent);
}

DyadicFunction weighted_maximal_range(double alpha, const DyadicFunction& f, std::uint64_t n_lo,
                                      std::uint64_t n_hi,
                                      const std::function<double(std::uint64_t)>& weight) {
    const std::size_t slots = f.size();
    std::vector<double> best(slots, 0.0);
    sweep_cesaro_means(alpha, f, n_lo, n_hi,
                       [&](std::uint64_t n, int, std::span<const double> vals) {
                           const double w = weight(n);
                           const std::size_t mask = vals.size() - 1;
                           for (std::size_t i = 0; i < slots; ++i) {
                               const double candidate = w * std::abs(vals[i & mask]);
                               if (candidate > best[i]) best[i] = candidate;
                           }
                       });
    return DyadicFunction(f.resolution(), std::move(best));
}

DyadicFunction maximal_operator(double alpha, const DyadicFunction& f, std::uint64_t max_order) {
    return weighted_maximal_range(alpha, f, 1, max_order, [](std::uint64_t) { return 1.0; });
}

DyadicFunction weighted_maximal_operator(double alpha, const DyadicFunction& f,
                                         std::uint64_t max_order) {
    if (max_order < 2) {
        throw ParameterError("weighted maximal operator needs max order >= 2");
    }
    return weighted_maximal_range(alpha, f, 2, max_order, [alpha](std::uint64_t n) {
        return std::pow(std::log(static_cast<double>(n)), -(1.0 + alpha));
    });
}

}  // namespace dyadic
