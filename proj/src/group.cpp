#include "dyadic/group.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace dyadic {

void check_resolution(int resolution) {
    if (resolution < kMinResolution || resolution > kMaxResolution) {
        throw ResolutionError("resolution must be in [" + std::to_string(kMinResolution) +
                              ", " + std::to_string(kMaxResolution) + "], got " +
                              std::to_string(resolution));
    }
}

GroupPoint::GroupPoint(std::uint32_t index, int resolution) : index_(index), resolution_(resolution) {
    check_resolution(resolution);
    if (index >= slot_count(resolution)) {
        throw ResolutionError("point index " + std::to_string(index) +
                              " out of range for resolution " + std::to_string(resolution));
    }
}

GroupPoint GroupPoint::unit(int coordinate, int resolution) {
    check_resolution(resolution);
    if (coordinate < 0 || coordinate >= resolution) {
        throw ResolutionError("unit coordinate " + std::to_string(coordinate) +
                              " out of range for resolution " + std::to_string(resolution));
    }
    return GroupPoint(std::uint32_t{1} << coordinate, resolution);
}

GroupPoint GroupPoint::from_bits(std::span<const int> bits, int resolution) {
    check_resolution(resolution);
    if (bits.size() > static_cast<std::size_t>(resolution)) {
        throw ResolutionError("bit sequence longer than resolution");
    }
    std::uint32_t index = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] != 0 && bits[j] != 1) {
            throw ParameterError("coordinates must be 0 or 1");
        }
        index |= static_cast<std::uint32_t>(bits[j]) << j;
    }
    return GroupPoint(index, resolution);
}

int GroupPoint::coordinate(int j) const {
    if (j < 0 || j >= resolution_) {
        throw ResolutionError("coordinate " + std::to_string(j) +
                              " out of range for resolution " + std::to_string(resolution_));
    }
    return static_cast<int>((index_ >> j) & 1u);
}

GroupPoint GroupPoint::operator+(const GroupPoint& other) const {
    if (resolution_ != other.resolution_) {
        throw ResolutionError("resolution mismatch: " + std::to_string(resolution_) + " vs " +
                              std::to_string(other.resolution_));
    }
    return GroupPoint(index_ ^ other.index_, resolution_);
}

DyadicInterval::DyadicInterval(int rank, GroupPoint base) : rank_(rank), base_(base) {
    if (rank < 0 || rank > base.resolution()) {
        throw ResolutionError("interval rank " + std::to_string(rank) +
                              " out of range for base resolution " +
                              std::to_string(base.resolution()));
    }
}

DyadicInterval DyadicInterval::anchored(int rank, int resolution) {
    return DyadicInterval(rank, GroupPoint::zero(resolution));
}

double DyadicInterval::measure() const {
    return std::ldexp(1.0, -rank_);
}

bool DyadicInterval::contains(const GroupPoint& point) const {
    if (point.resolution() < rank_) {
        throw ResolutionError("point resolution coarser than interval rank");
    }
    const std::uint32_t mask = (rank_ == 0) ? 0u : ((std::uint32_t{1} << rank_) - 1u);
    return (point.index() & mask) == (base_.index() & mask);
}

std::vector<std::uint32_t> DyadicInterval::slot_indices(int resolution) const {
    check_resolution(resolution);
    if (rank_ > resolution) {
        throw ResolutionError("interval rank " + std::to_string(rank_) +
                              " finer than resolution " + std::to_string(resolution));
    }
    const std::uint32_t mask = (rank_ == 0) ? 0u : ((std::uint32_t{1} << rank_) - 1u);
    const std::uint32_t low = base_.index() & mask;
    const std::size_t count = std::size_t{1} << (resolution - rank_);
    std::vector<std::uint32_t> slots;
    slots.reserve(count);
    for (std::size_t m = 0; m < count; ++m) {
        slots.push_back(low + (static_cast<std::uint32_t>(m) << rank_));
    }
    return slots;
}

DyadicFunction::DyadicFunction(int resolution, std::vector<double> values)
    : resolution_(resolution), values_(std::move(values)) {
    check_resolution(resolution);
    if (values_.size() != slot_count(resolution)) {
        throw ResolutionError("value count " + std::to_string(values_.size()) +
                              " does not match resolution " + std::to_string(resolution));
    }
}

DyadicFunction DyadicFunction::constant(int resolution, double value) {
    check_resolution(resolution);
    return DyadicFunction(resolution, std::vector<double>(slot_count(resolution), value));
}

double DyadicFunction::integral() const {
    double sum = 0.0;
    for (double v : values_) sum += v;
    return std::ldexp(sum, -resolution_);
}

double DyadicFunction::integral_over(const DyadicInterval& interval) const {
    if (interval.rank() > resolution_) {
        throw ResolutionError("interval rank finer than function resolution");
    }
    double sum = 0.0;
    for (std::uint32_t slot : interval.slot_indices(resolution_)) {
        sum += values_[slot];
    }
    return std::ldexp(sum, -resolution_);
}

DyadicFunction DyadicFunction::translate(const GroupPoint& t) const {
    if (t.resolution() != resolution_) {
        throw ResolutionError("translation point resolution mismatch");
    }
    std::vector<double> shifted(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        shifted[i] = values_[i ^ t.index()];
    }
    return DyadicFunction(resolution_, std::move(shifted));
}

namespace {

void check_same_resolution(const DyadicFunction& f, const DyadicFunction& g) {
    if (f.resolution() != g.resolution()) {
        throw ResolutionError("function resolution mismatch");
    }
}

}  // namespace

DyadicFunction operator+(const DyadicFunction& f, const DyadicFunction& g) {
    check_same_resolution(f, g);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] + g[i];
    return DyadicFunction(f.resolution(), std::move(out));
}

DyadicFunction operator-(const DyadicFunction& f, const DyadicFunction& g) {
    check_same_resolution(f, g);
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] - g[i];
    return DyadicFunction(f.resolution(), std::move(out));
}

DyadicFunction operator*(double scale, const DyadicFunction& f) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = scale * f[i];
    return DyadicFunction(f.resolution(), std::move(out));
}

DyadicFunction abs(const DyadicFunction& f) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(f[i]);
    return DyadicFunction(f.resolution(), std::move(out));
}

std::vector<DyadicInterval> complement_partition(int resolution) {
    check_resolution(resolution);
    const int M = resolution;
    std::vector<DyadicInterval> cosets;
    for (int k = 0; k + 1 < M; ++k) {
        for (int l = k + 1; l < M; ++l) {
            const GroupPoint base = GroupPoint::unit(k, M) + GroupPoint::unit(l, M);
            cosets.emplace_back(l + 1, base);
        }
    }
    for (int k = 0; k < M; ++k) {
        cosets.emplace_back(M, GroupPoint::unit(k, M));
    }
    return cosets;
}

}  // namespace dyadic
