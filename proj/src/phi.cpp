#include "dyadic/phi.hpp"

#include <cmath>
#include <sstream>

namespace dyadic {

PhiSchedule::PhiSchedule(Kind kind, double parameter, std::vector<double> table)
    : kind_(kind), parameter_(parameter), table_(std::move(table)) {}

PhiSchedule PhiSchedule::log_power(double beta) {
    if (!(beta > 0.0)) {
        throw ParameterError("log-power exponent must be positive");
    }
    return PhiSchedule(Kind::log_power, beta, {});
}

PhiSchedule PhiSchedule::log_over_loglog(double alpha) {
    if (!(alpha > 0.0)) {
        throw ParameterError("log-over-loglog needs positive alpha");
    }
    return PhiSchedule(Kind::log_over_loglog, alpha, {});
}

PhiSchedule PhiSchedule::from_table(std::vector<double> values) {
    if (values.empty()) {
        throw ParameterError("phi table must not be empty");
    }
    double previous = 1.0;
    for (double v : values) {
        if (!(v >= previous)) {
            throw ParameterError("phi table must be non-decreasing and >= 1");
        }
        previous = v;
    }
    return PhiSchedule(Kind::table, 0.0, std::move(values));
}

PhiSchedule PhiSchedule::parse(const std::string& text, double alpha) {
    if (text.rfind("log-power:", 0) == 0) {
        const double beta = std::stod(text.substr(10));
        if (!(beta < 1.0 + alpha)) {
            throw ParameterError("log-power exponent must be below 1 + alpha");
        }
        return log_power(beta);
    }
    if (text == "log-over-loglog") {
        return log_over_loglog(alpha);
    }
    if (text.rfind("table:", 0) == 0) {
        std::vector<double> values;
        std::stringstream ss(text.substr(6));
        std::string item;
        while (std::getline(ss, item, ',')) {
            values.push_back(std::stod(item));
        }
        return from_table(std::move(values));
    }
    throw ParameterError("unrecognized phi schedule: " + text);
}

double PhiSchedule::operator()(std::uint64_t n) const {
    if (n == 0) {
        throw ParameterError("phi is defined for positive orders");
    }
    switch (kind_) {
        case Kind::log_power:
            return std::max(1.0, std::pow(std::log(static_cast<double>(n)), parameter_));
        case Kind::log_over_loglog: {
            const double u = std::log(static_cast<double>(n));
            if (u <= 0.0) return 1.0;
            return std::max(1.0, std::pow(u, 1.0 + parameter_) / (1.0 + std::log1p(u)));
        }
        case Kind::table: {
            const std::size_t i = std::min<std::uint64_t>(n, table_.size());
            return table_[i - 1];
        }
    }
    return 1.0;
}

std::string PhiSchedule::describe() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::log_power:
            out << "log-power:" << parameter_;
            break;
        case Kind::log_over_loglog:
            out << "log-over-loglog";
            break;
        case Kind::table:
            out << "table[" << table_.size() << "]";
            break;
    }
    return out.str();
}

}  // namespace dyadic
