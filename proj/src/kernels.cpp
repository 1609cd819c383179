#include "dyadic/kernels.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <span>
#include <string>

#include "dyadic/transform.hpp"

namespace dyadic {

namespace {

void check_order(std::uint64_t n, int resolution) {
    if (n == 0) {
        throw ParameterError("kernel order must be positive");
    }
    if (n > slot_count(resolution)) {
        throw ResolutionError("kernel order " + std::to_string(n) + " above 2^" +
                              std::to_string(resolution));
    }
}

void check_cesaro_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw ParameterError("cesaro alpha must lie in (0, 1], got " + std::to_string(alpha));
    }
}

std::vector<double> to_doubles(const std::vector<std::int64_t>& ints) {
    std::vector<double> out(ints.size());
    for (std::size_t i = 0; i < ints.size(); ++i) out[i] = static_cast<double>(ints[i]);
    return out;
}

}  // namespace

KernelTable dirichlet_kernel(std::uint64_t n, int resolution) {
    check_resolution(resolution);
    check_order(n, resolution);
    std::vector<std::int64_t> work(slot_count(resolution), 0);
    for (std::uint64_t k = 0; k < n; ++k) work[k] = 1;
    fwht_inplace(std::span<std::int64_t>(work));
    DyadicFunction values(resolution, to_doubles(work));
    return KernelTable{KernelKind::dirichlet, 0.0, n, std::move(values), std::move(work)};
}

KernelTable dirichlet_kernel_closed(int j, int resolution) {
    check_resolution(resolution);
    if (j < 0 || j > resolution) {
        throw ResolutionError("dyadic order exponent " + std::to_string(j) +
                              " out of range for resolution " + std::to_string(resolution));
    }
    const std::size_t slots = slot_count(resolution);
    const std::uint64_t mask = (std::uint64_t{1} << j) - 1;
    std::vector<std::int64_t> ints(slots, 0);
    for (std::size_t i = 0; i < slots; ++i) {
        if ((i & mask) == 0) ints[i] = std::int64_t{1} << j;
    }
    DyadicFunction values(resolution, to_doubles(ints));
    return KernelTable{KernelKind::dirichlet, 0.0, std::uint64_t{1} << j, std::move(values),
                       std::move(ints)};
}

std::vector<std::int64_t> dirichlet_reference(std::uint64_t n, int resolution) {
    check_resolution(resolution);
    check_order(n, resolution);
    const std::size_t slots = slot_count(resolution);
    std::vector<std::int64_t> out(slots, 0);
    for (std::size_t i = 0; i < slots; ++i) {
        std::int64_t sum = 0;
        for (std::uint64_t k = 0; k < n; ++k) {
            sum += (std::popcount(k & static_cast<std::uint64_t>(i)) & 1) ? -1 : 1;
        }
        out[i] = sum;
    }
    return out;
}

KernelTable fejer_kernel_dyadic(int j, int resolution) {
    check_resolution(resolution);
    if (j < 0 || j > resolution) {
        throw ResolutionError("dyadic order exponent " + std::to_string(j) +
                              " out of range for resolution " + std::to_string(resolution));
    }
    const std::size_t slots = slot_count(resolution);
    const std::uint64_t mask = (std::uint64_t{1} << j) - 1;
    // numerators of 2^j * K_{2^j}: 2^{j-1}(2^j + 1) on I_j, 2^{j+t-1} on
    // I_j(e_t), 0 elsewhere; for j = 0 the kernel is identically 1.
    const std::int64_t center =
        (j == 0) ? 1 : (std::int64_t{1} << (j - 1)) * ((std::int64_t{1} << j) + 1);
    std::vector<std::int64_t> ints(slots, 0);
    for (std::size_t i = 0; i < slots; ++i) {
        const std::uint64_t low = i & mask;
        if (low == 0) {
            ints[i] = center;
        } else if (std::has_single_bit(low)) {
            const int t = std::countr_zero(low);
            ints[i] = std::int64_t{1} << (j + t - 1);
        }
    }
    std::vector<double> vals(slots);
    const double scale = std::ldexp(1.0, -j);
    for (std::size_t i = 0; i < slots; ++i) vals[i] = scale * static_cast<double>(ints[i]);
    return KernelTable{KernelKind::fejer, 0.0, std::uint64_t{1} << j,
                       DyadicFunction(resolution, std::move(vals)), std::move(ints)};
}

std::vector<std::int64_t> fejer_reference_numerators(int j, int resolution) {
    check_resolution(resolution);
    if (j < 0 || j > resolution) {
        throw ResolutionError("dyadic order exponent out of range");
    }
    const std::size_t slots = slot_count(resolution);
    std::vector<std::int64_t> dirichlet(slots, 0);
    std::vector<std::int64_t> accum(slots, 0);
    const std::uint64_t order = std::uint64_t{1} << j;
    for (std::uint64_t k = 1; k <= order; ++k) {
        // D_k = D_{k-1} + w_{k-1}
        for (std::size_t i = 0; i < slots; ++i) {
            dirichlet[i] += (std::popcount((k - 1) & static_cast<std::uint64_t>(i)) & 1) ? -1 : 1;
            accum[i] += dirichlet[i];
        }
    }
    return accum;
}

KernelTable cesaro_kernel(double alpha, std::uint64_t n, int resolution) {
    check_resolution(resolution);
    check_cesaro_alpha(alpha);
    check_order(n, resolution);
    const CesaroWeights weights(alpha, n);
    std::vector<double> coeffs(slot_count(resolution), 0.0);
    for (std::uint64_t jj = 0; jj < n; ++jj) {
        coeffs[jj] = weights[n - 1 - jj] / weights[n];
    }
    fwht_inplace(std::span<double>(coeffs));
    return KernelTable{KernelKind::cesaro, alpha, n, DyadicFunction(resolution, std::move(coeffs)),
                       std::nullopt};
}

DyadicFunction cesaro_kernel_reference(double alpha, std::uint64_t n, int resolution) {
    check_resolution(resolution);
    check_cesaro_alpha(alpha);
    check_order(n, resolution);
    const CesaroWeights lower(alpha - 1.0, n);
    const CesaroWeights weights(alpha, n);
    const std::size_t slots = slot_count(resolution);
    std::vector<double> sum(slots, 0.0);
    for (std::uint64_t k = 1; k <= n; ++k) {
        const auto table = dirichlet_reference(k, resolution);
        const double w = lower[n - k];
        for (std::size_t i = 0; i < slots; ++i) sum[i] += w * static_cast<double>(table[i]);
    }
    for (double& v : sum) v /= weights[n];
    return DyadicFunction(resolution, std::move(sum));
}

std::vector<L1ScanEntry> l1_norm_scan(double alpha, std::uint64_t n_max, int resolution) {
    check_resolution(resolution);
    check_cesaro_alpha(alpha);
    check_order(n_max, resolution);
    const CesaroWeights weights(alpha, n_max);
    std::vector<L1ScanEntry> out;
    out.reserve(n_max);
    std::vector<double> coeffs;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        coeffs.assign(n, 0.0);
        for (std::uint64_t jj = 0; jj < n; ++jj) coeffs[jj] = weights[n - 1 - jj] / weights[n];
        const std::vector<double> vals = synthesize_prefix(coeffs, n);
        double sum = 0.0;
        for (double v : vals) sum += std::abs(v);
        out.push_back({n, std::ldexp(sum, -prefix_rank(n))});
    }
    return out;
}

MajorizationCheck cesaro_majorization_check(double alpha, std::uint64_t n, int resolution) {
    check_resolution(resolution);
    check_cesaro_alpha(alpha);
    check_order(n, resolution);
    const KernelTable kernel = cesaro_kernel(alpha, n, resolution);
    const int top = static_cast<int>(std::bit_width(n)) - 1;
    const std::size_t slots = slot_count(resolution);

    const CesaroWeights weights(alpha, n);
    std::vector<double> majorant(slots, 0.0);
    for (int j = 0; j <= top; ++j) {
        const KernelTable fejer = fejer_kernel_dyadic(j, resolution);
        const double w = std::pow(2.0, alpha * j);
        for (std::size_t i = 0; i < slots; ++i) majorant[i] += w * fejer.values[i];
    }
    const double norm = 1.0 / weights[n - 1];
    for (double& v : majorant) v *= norm;

    // Coefficient mass of the kernel bounds the synthesis roundoff scale.
    double coeff_mass = 0.0;
    for (std::uint64_t jj = 0; jj < n; ++jj) coeff_mass += weights[n - 1 - jj] / weights[n];
    const double zero_tolerance = 1e-9 * coeff_mass;

    MajorizationCheck result{0.0, 0};
    for (std::size_t i = 0; i < slots; ++i) {
        const double num = std::abs(kernel.values[i]);
        if (majorant[i] > 0.0) {
            result.worst_ratio = std::max(result.worst_ratio, num / majorant[i]);
        } else if (num > zero_tolerance) {
            ++result.support_violations;
        }
    }
    return result;
}

DyadicFunction convolve(const DyadicFunction& f, const DyadicFunction& g) {
    if (f.resolution() != g.resolution()) {
        throw ResolutionError("convolution operands at different resolutions");
    }
    const std::size_t slots = f.size();
    std::vector<double> out(slots, 0.0);
    for (std::size_t x = 0; x < slots; ++x) {
        double sum = 0.0;
        for (std::size_t t = 0; t < slots; ++t) {
            sum += f[t] * g[x ^ t];
        }
        out[x] = std::ldexp(sum, -f.resolution());
    }
    return DyadicFunction(f.resolution(), std::move(out));
}

}  // namespace dyadic
