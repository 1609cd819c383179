#include "dyadic/transform.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace dyadic {

WalshSpectrum::WalshSpectrum(int resolution, std::vector<double> coefficients)
    : resolution_(resolution), coefficients_(std::move(coefficients)) {
    check_resolution(resolution);
    if (coefficients_.size() != slot_count(resolution)) {
        throw ResolutionError("coefficient count does not match resolution");
    }
}

double rademacher(int k, const GroupPoint& x) {
    if (k < 0 || k >= x.resolution()) {
        throw ResolutionError("rademacher index " + std::to_string(k) +
                              " out of range for resolution " + std::to_string(x.resolution()));
    }
    return x.coordinate(k) == 0 ? 1.0 : -1.0;
}

double walsh(std::uint64_t n, const GroupPoint& x) {
    if (n >= slot_count(x.resolution())) {
        throw ResolutionError("walsh frequency " + std::to_string(n) +
                              " at or above 2^" + std::to_string(x.resolution()));
    }
    const int parity = std::popcount(n & static_cast<std::uint64_t>(x.index())) & 1;
    return parity == 0 ? 1.0 : -1.0;
}

namespace {

template <typename T>
void butterfly(std::span<T> data) {
    const std::size_t n = data.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t block = 0; block < n; block += h << 1) {
            for (std::size_t j = block; j < block + h; ++j) {
                const T a = data[j];
                const T b = data[j + h];
                data[j] = a + b;
                data[j + h] = a - b;
            }
        }
    }
}

}  // namespace

void fwht_inplace(std::span<double> data) { butterfly(data); }
void fwht_inplace(std::span<std::int64_t> data) { butterfly(data); }

WalshSpectrum fwht(const DyadicFunction& f) {
    std::vector<double> work(f.values().begin(), f.values().end());
    fwht_inplace(std::span<double>(work));
    const double scale = std::ldexp(1.0, -f.resolution());
    for (double& c : work) c *= scale;
    return WalshSpectrum(f.resolution(), std::move(work));
}

DyadicFunction synthesize(const WalshSpectrum& spectrum) {
    std::vector<double> work(spectrum.coefficients().begin(), spectrum.coefficients().end());
    fwht_inplace(std::span<double>(work));
    return DyadicFunction(spectrum.resolution(), std::move(work));
}

DyadicFunction partial_sum(const WalshSpectrum& spectrum, std::uint64_t n) {
    if (n > spectrum.size()) {
        throw ResolutionError("partial sum order " + std::to_string(n) + " above 2^" +
                              std::to_string(spectrum.resolution()));
    }
    std::vector<double> work(spectrum.size(), 0.0);
    for (std::uint64_t k = 0; k < n; ++k) work[k] = spectrum[k];
    fwht_inplace(std::span<double>(work));
    return DyadicFunction(spectrum.resolution(), std::move(work));
}

int prefix_rank(std::uint64_t n) {
    if (n == 0) return 0;
    return static_cast<int>(std::bit_width(n - 1));
}

std::vector<double> synthesize_prefix(std::span<const double> coefficients, std::uint64_t n) {
    if (n > coefficients.size()) {
        throw ResolutionError("prefix length exceeds coefficient count");
    }
    const int rank = prefix_rank(n);
    std::vector<double> work(std::size_t{1} << rank, 0.0);
    for (std::uint64_t k = 0; k < n; ++k) work[k] = coefficients[k];
    fwht_inplace(std::span<double>(work));
    return work;
}

DyadicFunction fejer_mean(const WalshSpectrum& spectrum, std::uint64_t n) {
    if (n == 0) {
        throw ParameterError("fejer mean order must be positive");
    }
    if (n > spectrum.size()) {
        throw ResolutionError("fejer mean order " + std::to_string(n) + " above 2^" +
                              std::to_string(spectrum.resolution()));
    }
    std::vector<double> work(spectrum.size(), 0.0);
    for (std::uint64_t k = 0; k < n; ++k) {
        work[k] = spectrum[k] * (1.0 - static_cast<double>(k) / static_cast<double>(n));
    }
    fwht_inplace(std::span<double>(work));
    return DyadicFunction(spectrum.resolution(), std::move(work));
}

}  // namespace dyadic
