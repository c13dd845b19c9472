#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "hodgecheck/bundle.hpp"

namespace hodgecheck {

/// Isotypic decomposition of a local system on a special curve,
///   V = U + sum_i S^i(L) (x) T_i,
/// stored as symmetric-power index i -> rank of the unitary factor T_i
/// (i = 0 carries U). Zero multiplicities are never stored.
class Sl2Decomposition {
public:
    using Map = std::map<std::uint64_t, std::uint64_t>;

    Sl2Decomposition() = default;
    Sl2Decomposition(std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> init);
    explicit Sl2Decomposition(const Map& components);

    const Map& components() const noexcept { return components_; }
    bool empty() const noexcept { return components_.empty(); }

    /// Multiplicity of S^i, zero when absent.
    std::uint64_t multiplicity(std::uint64_t i) const;
    void add(std::uint64_t i, std::uint64_t mult);

    /// sum_i (i + 1) * rank(T_i)
    std::uint64_t total_rank() const;

    friend bool operator==(const Sl2Decomposition&, const Sl2Decomposition&) = default;

private:
    Map components_;
};

/// Sym^a (x) Sym^b = Sym^{a+b} + Sym^{a+b-2} + ... + Sym^{|a-b|}.
Sl2Decomposition clebsch_gordan(std::uint64_t a, std::uint64_t b);

/// Bilinear extension of clebsch_gordan; unitary ranks multiply.
Sl2Decomposition tensor_decompose(const Sl2Decomposition& x, const Sl2Decomposition& y);

/// SL(2) representations are self-dual and unitary factors are tracked by rank.
Sl2Decomposition dual_decompose(const Sl2Decomposition& x);

/// V^{(x) i} (x) (V^vee)^{(x) j}; the empty product is the trivial line.
Sl2Decomposition tensor_power_decompose(const Sl2Decomposition& v, std::uint64_t i, std::uint64_t j);

/// Slope grading of the Higgs bundle of S^i(L) (x) T: the pieces
/// L^{i-2m} (x) T for m = 0..i, of slope (i - 2m) deg L and rank t_rank.
GradedBundle higgs_grading(std::uint64_t i, const CurveNumerics& c, std::uint64_t t_rank);

/// Rank of the S^0-isotypic part, i.e. of the maximal unitary subsystem.
std::uint64_t unitary_rank(const Sl2Decomposition& x);

/// Index (mu, i, nu, j, a, b) of a Hom(L^{i-2mu} (x) T_{i,a}, L^{j-2nu} (x) T_{j,b})
/// summand of End^{-1,1} for a weight-k local system.
struct BoxTuple {
    std::uint64_t mu = 0;
    std::uint64_t i = 0;
    std::uint64_t nu = 0;
    std::uint64_t j = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    auto operator<=>(const BoxTuple&) const = default;
};

/// True iff t satisfies mu <= i <= k, nu <= j <= k, a <= k - i, b <= k - j
/// and j + b - nu = i + a - mu - 1.
bool in_box(const BoxTuple& t, std::uint64_t k);

/// All tuples of the index set for weight k, in lexicographic order.
std::vector<BoxTuple> enumerate_box(std::uint64_t k);

}  // namespace hodgecheck
