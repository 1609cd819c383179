#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyadic/errors.hpp"

namespace dyadic {

/// Non-decreasing weight schedule phi(n) >= 1 used by the divergence
/// experiment. Two analytic kinds are shipped, both dominated by
/// (log n)^{1+alpha} in the limit superior sense:
///   log-power(beta):    max(1, (log n)^beta), requires beta < 1 + alpha;
///   log-over-loglog:    max(1, (log n)^{1+alpha} / (1 + log(1 + log n))).
/// A custom table gives phi(n) for n = 1..size and stays constant after.
class PhiSchedule {
public:
    enum class Kind { log_power, log_over_loglog, table };

    static PhiSchedule log_power(double beta);
    static PhiSchedule log_over_loglog(double alpha);
    static PhiSchedule from_table(std::vector<double> values);

    /// Accepts "log-power:<beta>", "log-over-loglog", "table:v1,v2,...".
    /// alpha is needed to instantiate log-over-loglog and to validate the
    /// log-power exponent.
    static PhiSchedule parse(const std::string& text, double alpha);

    Kind kind() const { return kind_; }
    double operator()(std::uint64_t n) const;
    std::string describe() const;

private:
    PhiSchedule(Kind kind, double parameter, std::vector<double> table);

    Kind kind_;
    double parameter_;
    std::vector<double> table_;
};

}  // namespace dyadic
