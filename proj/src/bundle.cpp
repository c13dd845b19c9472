#include "hodgecheck/bundle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hodgecheck {

PolystablePiece::PolystablePiece(Rational s, std::uint64_t r) : slope(s), rank(r) {
    if (r == 0) throw std::invalid_argument("polystable piece must have rank >= 1");
}

GradedBundle GradedBundle::normalized() const {
    return slope_decompose(*this).as_bundle();
}

bool operator==(const GradedBundle& a, const GradedBundle& b) {
    return a.normalized().pieces_ == b.normalized().pieces_;
}

SlopeFiltration::SlopeFiltration(std::vector<PolystablePiece> quotients)
    : quotients_(std::move(quotients)) {
    for (std::size_t i = 1; i < quotients_.size(); ++i) {
        if (!(quotients_[i - 1].slope < quotients_[i].slope)) {
            throw std::invalid_argument("filtration slopes must be strictly increasing (level " +
                                        std::to_string(i) + ")");
        }
    }
}

std::uint64_t SlopeFiltration::partial_rank(std::size_t i) const {
    if (i >= quotients_.size()) throw std::out_of_range("filtration level out of range");
    std::uint64_t r = 0;
    for (std::size_t j = 0; j <= i; ++j) r += quotients_[j].rank;
    return r;
}

Rational degree(const GradedBundle& b) {
    Rational d;
    for (const auto& p : b.pieces()) d += p.degree();
    return d;
}

std::uint64_t rank(const GradedBundle& b) {
    std::uint64_t r = 0;
    for (const auto& p : b.pieces()) r += p.rank;
    return r;
}

Rational slope(const GradedBundle& b) {
    auto r = rank(b);
    if (r == 0) throw std::domain_error("slope undefined");
    return degree(b) / Rational(static_cast<std::int64_t>(r));
}

SlopeFiltration slope_decompose(const GradedBundle& b) {
    std::map<Rational, std::uint64_t> by_slope;
    for (const auto& p : b.pieces()) by_slope[p.slope] += p.rank;
    std::vector<PolystablePiece> out;
    out.reserve(by_slope.size());
    for (const auto& [s, r] : by_slope) out.emplace_back(s, r);
    return SlopeFiltration(std::move(out));
}

Rational deg_log_tangent(const CurveNumerics& c) {
    return Rational(2) - Rational(2 * static_cast<std::int64_t>(c.genus)) -
           Rational(static_cast<std::int64_t>(c.cusps));
}

Rational deg_L(const CurveNumerics& c) {
    Rational twice = -deg_log_tangent(c);
    if (twice.sign() <= 0) throw std::domain_error("not a Shimura-curve base");
    return twice / Rational(2);
}

GradedBundle dual(const GradedBundle& b) {
    std::vector<PolystablePiece> out;
    out.reserve(b.pieces().size());
    for (const auto& p : b.pieces()) out.emplace_back(-p.slope, p.rank);
    return GradedBundle(std::move(out));
}

GradedBundle tensor(const GradedBundle& a, const GradedBundle& b) {
    std::vector<PolystablePiece> out;
    out.reserve(a.pieces().size() * b.pieces().size());
    for (const auto& p : a.pieces()) {
        for (const auto& q : b.pieces()) out.emplace_back(p.slope + q.slope, p.rank * q.rank);
    }
    return GradedBundle(std::move(out));
}

GradedBundle direct_sum(const GradedBundle& a, const GradedBundle& b) {
    std::vector<PolystablePiece> out(a.pieces().begin(), a.pieces().end());
    out.insert(out.end(), b.pieces().begin(), b.pieces().end());
    return GradedBundle(std::move(out));
}

}  // namespace hodgecheck
