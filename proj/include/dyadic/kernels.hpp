#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyadic/cesaro_numbers.hpp"
#include "dyadic/group.hpp"

namespace dyadic {

enum class KernelKind { dirichlet, fejer, cesaro };

/// A summability kernel sampled on the rank-M cosets. Dirichlet values and
/// order * Fejer values are integers in exact arithmetic; for those kinds
/// exact_numerators carries the integer table (D_n itself, respectively
/// order * K_order) and `values` is its exact floating image.
struct KernelTable {
    KernelKind kind;
    double alpha;  // set for cesaro kernels, 0 otherwise
    std::uint64_t order;
    DyadicFunction values;
    std::optional<std::vector<std::int64_t>> exact_numerators;
};

/// D_n = sum of the first n Walsh functions, synthesized by an integer
/// butterfly. Exact for every n <= 2^M.
KernelTable dirichlet_kernel(std::uint64_t n, int resolution);

/// Closed form of the dyadic-order Dirichlet kernel: D_{2^j} equals 2^j on
/// I_j and 0 elsewhere.
KernelTable dirichlet_kernel_closed(int j, int resolution);

/// Independent oracle: slot-by-slot Walsh summation (quadratic). Returns the
/// integer table of D_n.
std::vector<std::int64_t> dirichlet_reference(std::uint64_t n, int resolution);

/// Closed form of the dyadic-order Fejer kernel K_{2^j}:
///   (2^j + 1)/2                  on I_j,
///   2^{t-1}                      on I_j(e_t) for t < j,
///   0                            elsewhere.
/// exact_numerators holds 2^j * K_{2^j}, always integral.
KernelTable fejer_kernel_dyadic(int j, int resolution);

/// Independent oracle: 2^j * K_{2^j} = D_1 + ... + D_{2^j} accumulated in
/// integers.
std::vector<std::int64_t> fejer_reference_numerators(int j, int resolution);

/// (C, alpha) kernel: the Dirichlet combination with weights
/// A_{n-k}^{alpha-1}/A_n^alpha for k = 1..n, synthesized from its Walsh
/// coefficients A_{n-1-j}^alpha / A_n^alpha (j < n). alpha in (0, 1].
KernelTable cesaro_kernel(double alpha, std::uint64_t n, int resolution);

/// Definition-route oracle: explicit weighted sum of integer Dirichlet
/// tables, O(n 2^M). Test and cross-check use only.
DyadicFunction cesaro_kernel_reference(double alpha, std::uint64_t n, int resolution);

struct L1ScanEntry {
    std::uint64_t n;
    double l1_norm;
};

/// L1 norms of the (C, alpha) kernels for n = 1..n_max, each integral exact
/// at the kernel's own rank.
std::vector<L1ScanEntry> l1_norm_scan(double alpha, std::uint64_t n_max, int resolution);

struct MajorizationCheck {
    double worst_ratio;               // empirical constant
    std::uint64_t support_violations; // slots with zero majorant but nonzero kernel
};

/// Pointwise domination of |K_n^alpha| by the scaled dyadic Fejer stack
/// (1/A_{n-1}^alpha) sum_{j<=|n|} 2^{j alpha} K_{2^j}. Returns the largest
/// ratio over slots with nonzero majorant and counts support violations.
MajorizationCheck cesaro_majorization_check(double alpha, std::uint64_t n, int resolution);

/// Reference convolution (f * g)(x) = integral of f(t) g(x + t) dmu(t),
/// quadratic in the slot count. Cross-check path only.
DyadicFunction convolve(const DyadicFunction& f, const DyadicFunction& g);

}  // namespace dyadic
