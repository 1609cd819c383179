#pragma once

#include <cstddef>
#include <vector>

#include "dyadic/errors.hpp"

namespace dyadic {

/// The Cesaro number sequence A_n^alpha = (alpha+1)...(alpha+n)/n!, built by
/// the product recurrence A_0 = 1, A_n = A_{n-1} (alpha + n)/n. Defined for
/// alpha > -1; the summability code uses alpha in (0, 1] and the companion
/// (alpha - 1)-sequence in (-1, 0].
///
/// Identities relied on downstream:
///   A_n^alpha - A_{n-1}^alpha = A_n^{alpha-1}
///   sum_{m=0}^{n-1} A_m^{alpha-1} = A_{n-1}^alpha
///   A_n^alpha ~ n^alpha / Gamma(alpha + 1)
class CesaroWeights {
public:
    CesaroWeights(double alpha, std::size_t max_order);

    double alpha() const { return alpha_; }
    std::size_t max_order() const { return values_.size() - 1; }
    double operator[](std::size_t n) const { return values_[n]; }

private:
    double alpha_;
    std::vector<double> values_;
};

/// Log-gamma evaluation of A_n^alpha, the independent cross-check route.
double cesaro_number_gamma(double alpha, std::size_t n);

}  // namespace dyadic
