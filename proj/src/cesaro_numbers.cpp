#include "dyadic/cesaro_numbers.hpp"

#include <cmath>
#include <string>

namespace dyadic {

CesaroWeights::CesaroWeights(double alpha, std::size_t max_order) : alpha_(alpha) {
    if (!(alpha > -1.0)) {
        throw ParameterError("cesaro order alpha must exceed -1, got " + std::to_string(alpha));
    }
    values_.resize(max_order + 1);
    values_[0] = 1.0;
    for (std::size_t n = 1; n <= max_order; ++n) {
        values_[n] = values_[n - 1] * ((alpha + static_cast<double>(n)) / static_cast<double>(n));
    }
}

double cesaro_number_gamma(double alpha, std::size_t n) {
    if (!(alpha > -1.0)) {
        throw ParameterError("cesaro order alpha must exceed -1");
    }
    if (n == 0) return 1.0;
    const double x = static_cast<double>(n);
    return std::exp(std::lgamma(x + alpha + 1.0) - std::lgamma(alpha + 1.0) - std::lgamma(x + 1.0));
}

}  // namespace dyadic
