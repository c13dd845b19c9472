#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hodgecheck/bundle.hpp"
#include "hodgecheck/sl2.hpp"

namespace hodgecheck {

/// Graded quotient N^i_{C/Y}/N^{i-1}_{C/Y} of the induced filtration,
/// tagged with the ambient level i it sits in. Levels where the quotient
/// vanishes are simply omitted.
struct SubLevel {
    std::size_t level = 0;
    PolystablePiece quotient;

    friend bool operator==(const SubLevel&, const SubLevel&) = default;
};

/// Slope data of a curve C in Y in X. The curve enters only through
/// deg T_C(-log S_C).
class RpcInput {
public:
    /// Sub levels may be given in any order; they are sorted by level. Throws
    /// std::invalid_argument for an out-of-range or repeated level index.
    RpcInput(Rational log_tangent_degree, SlopeFiltration ambient, std::vector<SubLevel> sub);
    RpcInput(const CurveNumerics& curve, SlopeFiltration ambient, std::vector<SubLevel> sub);

    const Rational& log_tangent_degree() const noexcept { return log_tangent_degree_; }
    const SlopeFiltration& ambient() const noexcept { return ambient_; }
    /// Sorted by level.
    const std::vector<SubLevel>& sub() const noexcept { return sub_; }

    GradedBundle sub_bundle() const;

    friend bool operator==(const RpcInput&, const RpcInput&) = default;

private:
    Rational log_tangent_degree_;
    SlopeFiltration ambient_;
    std::vector<SubLevel> sub_;
};

enum class LevelStatus { equality, strict_inequality, violated, empty_level };

std::string_view to_string(LevelStatus s);

struct LevelReport {
    std::size_t level = 0;
    std::optional<Rational> sub_slope;
    std::uint64_t sub_rank = 0;
    Rational ambient_slope;
    LevelStatus status = LevelStatus::empty_level;

    friend bool operator==(const LevelReport&, const LevelReport&) = default;
};

struct RpcReport {
    std::vector<LevelReport> per_level;
    Rational r_constant;
    Rational combined_lhs;  ///< deg N_{C/Y}
    Rational combined_rhs;  ///< r * deg T_C(-log S_C)
    Rational log_tangent_degree;
    bool rpc_holds = false;

    /// Some nonempty level has mu_sub > mu_amb, which no geometric input can produce.
    bool any_violated() const;

    friend bool operator==(const RpcReport&, const RpcReport&) = default;
};

/// Compares the induced filtration on N_{C/Y} level by level with the slope
/// filtration of N_{C/X}. Throws std::domain_error("degenerate curve") when
/// deg T_C(-log S_C) = 0.
RpcReport rpc_check(const RpcInput& input);

/// Ambient filtration for X = A_g: slopes deg T_C, deg T_C / 2, 0.
/// Ambient ranks are not consumed by the check, so each level is given the
/// smallest rank compatible with the sub data.
RpcInput ag_input(const CurveNumerics& curve, const std::array<std::uint64_t, 3>& sub_ranks,
                  const std::array<std::optional<Rational>, 3>& sub_slopes);

/// A_g specialization. A slope may be absent exactly when its rank is zero.
RpcReport rpc_check_ag(const CurveNumerics& curve, const std::array<std::uint64_t, 3>& sub_ranks,
                       const std::array<std::optional<Rational>, 3>& sub_slopes);

enum class SurfaceKind { hilbert_modular, ball_quotient };

std::string_view to_string(SurfaceKind k);

struct SurfaceResult {
    std::int64_t lhs = 0;
    bool holds = false;
};

/// (K_Y + S_Y).C + 2 C^2 (Hilbert modular) or + 3 C^2 (ball quotient).
SurfaceResult surface_check(SurfaceKind kind, std::int64_t ks_dot_c, std::int64_t c_squared);

/// The same question posed as a one-level general RPC instance: by adjunction
/// deg T_C(-log S_C) = -((K_Y+S_Y).C + C^2) and deg N_{C/Y} = C^2, with
/// r = 1 (Hilbert modular) or 1/2 (ball quotient).
RpcInput surface_input(SurfaceKind kind, std::int64_t ks_dot_c, std::int64_t c_squared);
RpcReport surface_from_general(SurfaceKind kind, std::int64_t ks_dot_c, std::int64_t c_squared);

/// phi^*T_Y(-log S_Y) = T_C(-log S_C) + sum_i N^i_{C/Y}/N^{i-1}_{C/Y}.
/// Throws std::domain_error unless RPC holds.
std::vector<PolystablePiece> splitting_report(const RpcInput& input);

/// Whether the thickening component source -> target (x) Q^vee preserves
/// slope, Q being a graded quotient of the normal filtration of slope
/// normal_quotient_slope.
bool thickening_slope_check(const PolystablePiece& source, const PolystablePiece& target,
                            const Rational& normal_quotient_slope);

/// The normal slope that makes source -> target (x) Q^vee slope-preserving.
Rational thickening_normal_slope(const PolystablePiece& source, const PolystablePiece& target);

/// One component of the weight-one thickening on a special curve.
struct ThickeningMorphism {
    std::string_view label;
    PolystablePiece source;
    PolystablePiece target;
    /// Graded piece of the normal direction this component pairs with:
    /// -1 for T_C(-log S_C) itself, otherwise the level i of N^i/N^{i-1}.
    int normal_level = -1;
};

/// The four morphisms L(x)T -> L^-1(x)T(x)Omega^1_C(log), L(x)T -> L^-1(x)T(x)(N^0)^vee,
/// L(x)T -> U^vee(x)(N^1/N^0)^vee and U -> U^vee(x)(N^2/N^1)^vee, for a given deg L.
std::vector<ThickeningMorphism> weight_one_thickening(const Rational& deg_line);

/// Slopes of N^0, N^1/N^0, N^2/N^1 forced by requiring every weight-one
/// thickening component to preserve slope.
std::array<Rational, 3> thickening_forced_slopes(const Rational& deg_line);

/// Rank of the infinitesimally fixed part W_{y in Y} at slope level: the
/// unitary summand of an even-weight tensor system restricted to the curve.
std::uint64_t fixed_part_rank(const Sl2Decomposition& w);

}  // namespace hodgecheck
