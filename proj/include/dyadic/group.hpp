#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dyadic/errors.hpp"

namespace dyadic {

/// Finite truncation of the dyadic group: points keep M coordinate bits,
/// functions are constant on rank-M cosets (2^M slots).
///
/// Bit convention, fixed globally: coordinate x_j of a point is bit j of its
/// slot index, with x_0 the least-significant bit. Group addition is bitwise
/// XOR of indices. Haar measure gives each rank-M coset mass 2^-M.
inline constexpr int kMinResolution = 1;
inline constexpr int kMaxResolution = 24;

void check_resolution(int resolution);

inline std::size_t slot_count(int resolution) {
    return std::size_t{1} << resolution;
}

/// A group element truncated to M coordinates.
class GroupPoint {
public:
    GroupPoint(std::uint32_t index, int resolution);

    static GroupPoint zero(int resolution) { return GroupPoint(0, resolution); }

    /// The generator e_n: coordinate n set, all others zero.
    static GroupPoint unit(int coordinate, int resolution);

    /// Builds a point from explicit coordinates, least-significant first;
    /// coordinates beyond bits.size() are zero.
    static GroupPoint from_bits(std::span<const int> bits, int resolution);

    std::uint32_t index() const { return index_; }
    int resolution() const { return resolution_; }

    /// Coordinate x_j (0 or 1).
    int coordinate(int j) const;

    /// Group addition: coordinatewise mod-2, i.e. XOR of indices.
    /// Requires equal resolutions. Every element is its own inverse.
    GroupPoint operator+(const GroupPoint& other) const;

    bool operator==(const GroupPoint& other) const = default;

private:
    std::uint32_t index_;
    int resolution_;
};

/// The coset I_n(base): all points whose first n coordinates agree with the
/// base point. Rank 0 is the whole group. Haar measure 2^-n.
class DyadicInterval {
public:
    DyadicInterval(int rank, GroupPoint base);

    /// I_n anchored at zero.
    static DyadicInterval anchored(int rank, int resolution);

    int rank() const { return rank_; }
    const GroupPoint& base() const { return base_; }
    double measure() const;

    bool contains(const GroupPoint& point) const;

    /// Slot indices of all rank-`resolution` cosets inside the interval,
    /// ascending. There are exactly 2^(resolution - rank) of them.
    std::vector<std::uint32_t> slot_indices(int resolution) const;

private:
    int rank_;
    GroupPoint base_;
};

/// Real-valued function constant on rank-M cosets; slot i holds the value on
/// the coset of the point with index i. Immutable after construction.
class DyadicFunction {
public:
    DyadicFunction(int resolution, std::vector<double> values);

    static DyadicFunction constant(int resolution, double value);
    static DyadicFunction zero(int resolution) { return constant(resolution, 0.0); }

    int resolution() const { return resolution_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t slot) const { return values_[slot]; }
    std::span<const double> values() const { return values_; }

    /// Haar integral over the whole group: 2^-M times the slot sum.
    double integral() const;

    /// Haar integral restricted to an interval of rank <= M.
    double integral_over(const DyadicInterval& interval) const;

    /// x -> f(x + t); a permutation of slots, so measure-preserving.
    DyadicFunction translate(const GroupPoint& t) const;

private:
    int resolution_;
    std::vector<double> values_;
};

DyadicFunction operator+(const DyadicFunction& f, const DyadicFunction& g);
DyadicFunction operator-(const DyadicFunction& f, const DyadicFunction& g);
DyadicFunction operator*(double scale, const DyadicFunction& f);
DyadicFunction abs(const DyadicFunction& f);

/// The cosets I_{l+1}(e_k + e_l), 0 <= k < l <= M-1, followed by I_M(e_k),
/// 0 <= k <= M-1. Pairwise disjoint; their union is the complement of I_M,
/// so the measures sum to 1 - 2^-M.
std::vector<DyadicInterval> complement_partition(int resolution);

}  // namespace dyadic
