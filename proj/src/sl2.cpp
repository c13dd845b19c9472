#include "hodgecheck/sl2.hpp"

#include <stdexcept>

namespace hodgecheck {

Sl2Decomposition::Sl2Decomposition(
    std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> init) {
    for (const auto& [i, m] : init) add(i, m);
}

Sl2Decomposition::Sl2Decomposition(const Map& components) {
    for (const auto& [i, m] : components) add(i, m);
}

std::uint64_t Sl2Decomposition::multiplicity(std::uint64_t i) const {
    auto it = components_.find(i);
    return it == components_.end() ? 0 : it->second;
}

void Sl2Decomposition::add(std::uint64_t i, std::uint64_t mult) {
    if (mult != 0) components_[i] += mult;
}

std::uint64_t Sl2Decomposition::total_rank() const {
    std::uint64_t r = 0;
    for (const auto& [i, m] : components_) r += (i + 1) * m;
    return r;
}

Sl2Decomposition clebsch_gordan(std::uint64_t a, std::uint64_t b) {
    Sl2Decomposition out;
    std::uint64_t lo = a > b ? a - b : b - a;
    for (std::uint64_t n = lo; n <= a + b; n += 2) out.add(n, 1);
    return out;
}

Sl2Decomposition tensor_decompose(const Sl2Decomposition& x, const Sl2Decomposition& y) {
    Sl2Decomposition out;
    for (const auto& [i, t] : x.components()) {
        for (const auto& [j, u] : y.components()) {
            const auto cg = clebsch_gordan(i, j);
            for (const auto& [n, m] : cg.components()) out.add(n, m * t * u);
        }
    }
    return out;
}

Sl2Decomposition dual_decompose(const Sl2Decomposition& x) {
    return x;
}

Sl2Decomposition tensor_power_decompose(const Sl2Decomposition& v, std::uint64_t i, std::uint64_t j) {
    Sl2Decomposition out{{0, 1}};
    for (std::uint64_t n = 0; n < i; ++n) out = tensor_decompose(out, v);
    const Sl2Decomposition vd = dual_decompose(v);
    for (std::uint64_t n = 0; n < j; ++n) out = tensor_decompose(out, vd);
    return out;
}

GradedBundle higgs_grading(std::uint64_t i, const CurveNumerics& c, std::uint64_t t_rank) {
    const Rational dl = deg_L(c);
    std::vector<PolystablePiece> pieces;
    pieces.reserve(i + 1);
    for (std::uint64_t m = 0; m <= i; ++m) {
        auto power = static_cast<std::int64_t>(i) - 2 * static_cast<std::int64_t>(m);
        pieces.emplace_back(Rational(power) * dl, t_rank);
    }
    return GradedBundle(std::move(pieces));
}

std::uint64_t unitary_rank(const Sl2Decomposition& x) {
    return x.multiplicity(0);
}

bool in_box(const BoxTuple& t, std::uint64_t k) {
    if (!(t.mu <= t.i && t.i <= k)) return false;
    if (!(t.nu <= t.j && t.j <= k)) return false;
    if (t.a > k - t.i || t.b > k - t.j) return false;
    // signed: both sides may be -1
    auto lhs = static_cast<std::int64_t>(t.j + t.b) - static_cast<std::int64_t>(t.nu);
    auto rhs = static_cast<std::int64_t>(t.i + t.a) - static_cast<std::int64_t>(t.mu) - 1;
    return lhs == rhs;
}

std::vector<BoxTuple> enumerate_box(std::uint64_t k) {
    // b is determined by the other five indices, so only five loops are needed.
    std::vector<BoxTuple> out;
    for (std::uint64_t mu = 0; mu <= k; ++mu) {
        for (std::uint64_t i = mu; i <= k; ++i) {
            for (std::uint64_t nu = 0; nu <= k; ++nu) {
                for (std::uint64_t j = nu; j <= k; ++j) {
                    for (std::uint64_t a = 0; a <= k - i; ++a) {
                        auto b = static_cast<std::int64_t>(i + a) - static_cast<std::int64_t>(mu) - 1 -
                                 static_cast<std::int64_t>(j) + static_cast<std::int64_t>(nu);
                        if (b < 0 || static_cast<std::uint64_t>(b) > k - j) continue;
                        out.push_back({mu, i, nu, j, a, static_cast<std::uint64_t>(b)});
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace hodgecheck
