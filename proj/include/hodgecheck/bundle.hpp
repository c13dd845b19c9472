#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "hodgecheck/rational.hpp"

namespace hodgecheck {

/// A polystable bundle seen only through its slope and rank.
struct PolystablePiece {
    Rational slope;
    std::uint64_t rank = 1;

    PolystablePiece() = default;
    PolystablePiece(Rational s, std::uint64_t r);

    Rational degree() const { return slope * Rational(static_cast<std::int64_t>(rank)); }

    friend bool operator==(const PolystablePiece&, const PolystablePiece&) = default;
};

/// Finite multiset of polystable pieces. Input order is kept as given;
/// equality compares the merged, slope-sorted form, so two bundles are equal
/// exactly when they have the same rank at every slope.
class GradedBundle {
public:
    GradedBundle() = default;
    GradedBundle(std::initializer_list<PolystablePiece> pieces) : pieces_(pieces) {}
    explicit GradedBundle(std::vector<PolystablePiece> pieces) : pieces_(std::move(pieces)) {}

    std::span<const PolystablePiece> pieces() const noexcept { return pieces_; }
    bool empty() const noexcept { return pieces_.empty(); }

    /// Merged and sorted by increasing slope.
    GradedBundle normalized() const;

    friend bool operator==(const GradedBundle& a, const GradedBundle& b);

private:
    std::vector<PolystablePiece> pieces_;
};

/// Graded quotients N^0, N^1/N^0, ... of a slope filtration. Slopes are
/// strictly increasing along the list.
class SlopeFiltration {
public:
    SlopeFiltration() = default;
    /// Throws std::invalid_argument unless slopes strictly increase.
    explicit SlopeFiltration(std::vector<PolystablePiece> quotients);
    SlopeFiltration(std::initializer_list<PolystablePiece> quotients)
        : SlopeFiltration(std::vector<PolystablePiece>(quotients)) {}

    std::span<const PolystablePiece> quotients() const noexcept { return quotients_; }
    std::size_t levels() const noexcept { return quotients_.size(); }
    const PolystablePiece& operator[](std::size_t i) const { return quotients_.at(i); }

    /// rk(N^i), the rank of the i-th filtration step.
    std::uint64_t partial_rank(std::size_t i) const;

    GradedBundle as_bundle() const { return GradedBundle(quotients_); }

    friend bool operator==(const SlopeFiltration&, const SlopeFiltration&) = default;

private:
    std::vector<PolystablePiece> quotients_;
};

/// Genus and number of cusps of a compactified curve.
struct CurveNumerics {
    std::uint64_t genus = 0;
    std::uint64_t cusps = 0;

    friend bool operator==(const CurveNumerics&, const CurveNumerics&) = default;
};

Rational degree(const GradedBundle& b);
std::uint64_t rank(const GradedBundle& b);
/// Throws std::domain_error("slope undefined") for a zero-rank bundle.
Rational slope(const GradedBundle& b);

/// Merges equal slopes and orders the result by increasing slope, giving the
/// quotients R_0, R_1, ... with N^i = R_0 + ... + R_i.
SlopeFiltration slope_decompose(const GradedBundle& b);

/// deg T_C(-log S_C) = 2 - 2g - s.
Rational deg_log_tangent(const CurveNumerics& c);
/// deg L with L^2 = Omega^1_C(log S_C), i.e. (2g - 2 + s)/2. Throws
/// std::domain_error when 2g - 2 + s <= 0.
Rational deg_L(const CurveNumerics& c);

GradedBundle dual(const GradedBundle& b);
GradedBundle tensor(const GradedBundle& a, const GradedBundle& b);
GradedBundle direct_sum(const GradedBundle& a, const GradedBundle& b);

}  // namespace hodgecheck
