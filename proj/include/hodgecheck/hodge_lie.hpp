#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

namespace hodgecheck {

/// Hodge numbers h^{p,q} (p + q = weight) of a polarized structure, listed
/// from the top p downwards. The list is palindromic and centred on
/// weight/2, so the top index is (weight + size - 1) / 2. Zeros at either
/// end are kept: weight 2 with {0, 1, 0} is a pure (1,1) class.
class HodgeVector {
public:
    /// Throws std::invalid_argument if the list is empty, not palindromic,
    /// or of the wrong parity for the weight.
    HodgeVector(int weight, std::vector<std::uint64_t> numbers);

    int weight() const noexcept { return weight_; }
    const std::vector<std::uint64_t>& numbers() const noexcept { return numbers_; }
    int top_p() const noexcept;
    /// h^{p, weight - p}, zero outside the stored range.
    std::uint64_t h(int p) const;
    std::uint64_t dimension() const;

    friend bool operator==(const HodgeVector&, const HodgeVector&) = default;

private:
    int weight_;
    std::vector<std::uint64_t> numbers_;
};

HodgeVector hodge_convolve(const HodgeVector& x, const HodgeVector& y);
HodgeVector hodge_dual(const HodgeVector& x);
HodgeVector sym2_hodge(const HodgeVector& x);
HodgeVector wedge2_hodge(const HodgeVector& x);

enum class PolarizationGroup { symplectic, orthogonal };

std::string_view to_string(PolarizationGroup g);

/// Weight-zero Hodge decomposition of a Lie algebra: p -> dim g^{-p,p}.
/// Every p from -top to top is present, zeros included.
using LieHodgeDims = std::map<int, std::uint64_t>;

/// g = Sym^2 V (symplectic, odd weight) or Lambda^2 V (orthogonal, even
/// weight), Tate-twisted to weight 0 by r = p - weight(V). Throws
/// std::invalid_argument on a parity mismatch.
LieHodgeDims lie_hodge_dims(const HodgeVector& v, PolarizationGroup group);

/// dim g^{-1,1}, the horizontal tangent directions.
std::uint64_t dim_horizontal(const LieHodgeDims& d);
/// sum_{p >= 1} dim g^{-p,p}, the complex dimension of the period domain.
std::uint64_t dim_domain(const LieHodgeDims& d);
/// True iff g is concentrated in types (-1,1), (0,0), (1,-1).
bool is_hermitian_type(const LieHodgeDims& d);

enum class HermitianFamilyKind { sp, su, so2n, so_star };

struct HermitianFamily {
    HermitianFamilyKind kind;
    std::vector<std::uint64_t> params;

    friend bool operator==(const HermitianFamily&, const HermitianFamily&) = default;
};

std::string_view to_string(HermitianFamilyKind k);
/// Accepts "sp", "su", "so2", "so_star" (and the longer spellings
/// "sp(2g)", "su(p,q)", "so(2,n)", "so_star(2n)"). Throws std::invalid_argument.
HermitianFamilyKind parse_family(std::string_view name);

/// dim H/K of the Hermitian symmetric domain: sp(2g) -> g(g+1)/2,
/// su(p,q) -> pq, so(2,n) -> n, so*(2n) -> n(n-1)/2. Throws
/// std::invalid_argument for bad parameters.
std::uint64_t hermitian_dim(const HermitianFamily& f);

enum class LieStatus { lie_equality, lie_fails, inconsistent };

std::string_view to_string(LieStatus s);

/// dim H/K >= dim Y always holds for geometric input, so the condition
/// dim H/K <= dim Y can only be met with equality.
LieStatus check_lie(std::uint64_t dim_hk, std::uint64_t dim_y);

}  // namespace hodgecheck
