#include "hodgecheck/rpc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hodgecheck {

RpcInput::RpcInput(Rational log_tangent_degree, SlopeFiltration ambient, std::vector<SubLevel> sub)
    : log_tangent_degree_(log_tangent_degree), ambient_(std::move(ambient)), sub_(std::move(sub)) {
    std::sort(sub_.begin(), sub_.end(),
              [](const SubLevel& a, const SubLevel& b) { return a.level < b.level; });
    for (std::size_t n = 0; n < sub_.size(); ++n) {
        if (sub_[n].level >= ambient_.levels()) {
            throw std::invalid_argument("sub level " + std::to_string(sub_[n].level) +
                                        " exceeds the ambient filtration (" +
                                        std::to_string(ambient_.levels()) + " levels)");
        }
        if (n > 0 && sub_[n - 1].level == sub_[n].level) {
            throw std::invalid_argument("sub level " + std::to_string(sub_[n].level) + " given twice");
        }
    }
}

RpcInput::RpcInput(const CurveNumerics& curve, SlopeFiltration ambient, std::vector<SubLevel> sub)
    : RpcInput(deg_log_tangent(curve), std::move(ambient), std::move(sub)) {}

GradedBundle RpcInput::sub_bundle() const {
    std::vector<PolystablePiece> pieces;
    pieces.reserve(sub_.size());
    for (const auto& s : sub_) pieces.push_back(s.quotient);
    return GradedBundle(std::move(pieces));
}

std::string_view to_string(LevelStatus s) {
    switch (s) {
        case LevelStatus::equality: return "equality";
        case LevelStatus::strict_inequality: return "strict_inequality";
        case LevelStatus::violated: return "violated";
        case LevelStatus::empty_level: return "empty_level";
    }
    return "?";
}

bool RpcReport::any_violated() const {
    return std::any_of(per_level.begin(), per_level.end(),
                       [](const LevelReport& l) { return l.status == LevelStatus::violated; });
}

RpcReport rpc_check(const RpcInput& input) {
    const Rational& tangent = input.log_tangent_degree();
    if (tangent.sign() == 0) throw std::domain_error("degenerate curve");

    RpcReport report;
    report.log_tangent_degree = tangent;
    report.rpc_holds = true;
    Rational weighted_ambient;

    auto sub = input.sub().begin();
    for (std::size_t level = 0; level < input.ambient().levels(); ++level) {
        LevelReport lr;
        lr.level = level;
        lr.ambient_slope = input.ambient()[level].slope;
        if (sub != input.sub().end() && sub->level == level) {
            const auto& q = sub->quotient;
            lr.sub_slope = q.slope;
            lr.sub_rank = q.rank;
            if (q.slope == lr.ambient_slope) {
                lr.status = LevelStatus::equality;
            } else if (q.slope < lr.ambient_slope) {
                lr.status = LevelStatus::strict_inequality;
            } else {
                lr.status = LevelStatus::violated;
            }
            report.combined_lhs += q.degree();
            weighted_ambient += lr.ambient_slope * Rational(static_cast<std::int64_t>(q.rank));
            if (lr.status != LevelStatus::equality) report.rpc_holds = false;
            ++sub;
        } else {
            lr.status = LevelStatus::empty_level;
        }
        report.per_level.push_back(std::move(lr));
    }

    report.r_constant = weighted_ambient / tangent;
    report.combined_rhs = report.r_constant * tangent;
    return report;
}

RpcInput ag_input(const CurveNumerics& curve, const std::array<std::uint64_t, 3>& sub_ranks,
                  const std::array<std::optional<Rational>, 3>& sub_slopes) {
    // rejects curves with deg T_C >= 0, for which the three slopes would not increase
    (void)deg_L(curve);
    const Rational tangent = deg_log_tangent(curve);
    const std::array<Rational, 3> amb{tangent, tangent / Rational(2), Rational(0)};

    std::vector<PolystablePiece> ambient;
    std::vector<SubLevel> sub;
    for (std::size_t i = 0; i < 3; ++i) {
        ambient.emplace_back(amb[i], std::max<std::uint64_t>(sub_ranks[i], 1));
        if (sub_ranks[i] == 0) continue;
        if (!sub_slopes[i]) {
            throw std::invalid_argument("A_g level " + std::to_string(i) + " has rank " +
                                        std::to_string(sub_ranks[i]) + " but no slope");
        }
        sub.push_back({i, PolystablePiece(*sub_slopes[i], sub_ranks[i])});
    }
    return RpcInput(tangent, SlopeFiltration(std::move(ambient)), std::move(sub));
}

RpcReport rpc_check_ag(const CurveNumerics& curve, const std::array<std::uint64_t, 3>& sub_ranks,
                       const std::array<std::optional<Rational>, 3>& sub_slopes) {
    return rpc_check(ag_input(curve, sub_ranks, sub_slopes));
}

std::string_view to_string(SurfaceKind k) {
    return k == SurfaceKind::hilbert_modular ? "hilbert_modular" : "ball_quotient";
}

SurfaceResult surface_check(SurfaceKind kind, std::int64_t ks_dot_c, std::int64_t c_squared) {
    const std::int64_t coeff = kind == SurfaceKind::hilbert_modular ? 2 : 3;
    SurfaceResult r;
    r.lhs = ks_dot_c + coeff * c_squared;
    r.holds = r.lhs == 0;
    return r;
}

RpcInput surface_input(SurfaceKind kind, std::int64_t ks_dot_c, std::int64_t c_squared) {
    const Rational tangent = -(Rational(ks_dot_c) + Rational(c_squared));
    if (tangent.sign() == 0) throw std::domain_error("degenerate curve");
    const Rational r = kind == SurfaceKind::hilbert_modular ? Rational(1) : Rational(1, 2);
    // one rank-one level: r = mu_amb / deg T_C
    SlopeFiltration ambient{PolystablePiece(r * tangent, 1)};
    return RpcInput(tangent, std::move(ambient), {SubLevel{0, PolystablePiece(Rational(c_squared), 1)}});
}

RpcReport surface_from_general(SurfaceKind kind, std::int64_t ks_dot_c, std::int64_t c_squared) {
    return rpc_check(surface_input(kind, ks_dot_c, c_squared));
}

std::vector<PolystablePiece> splitting_report(const RpcInput& input) {
    if (!rpc_check(input).rpc_holds) throw std::domain_error("splitting only under RPC");
    std::vector<PolystablePiece> out;
    out.reserve(input.sub().size() + 1);
    out.emplace_back(input.log_tangent_degree(), 1);
    for (const auto& s : input.sub()) out.push_back(s.quotient);
    return out;
}

bool thickening_slope_check(const PolystablePiece& source, const PolystablePiece& target,
                            const Rational& normal_quotient_slope) {
    return source.slope == target.slope - normal_quotient_slope;
}

Rational thickening_normal_slope(const PolystablePiece& source, const PolystablePiece& target) {
    return target.slope - source.slope;
}

std::vector<ThickeningMorphism> weight_one_thickening(const Rational& deg_line) {
    if (deg_line.sign() <= 0) throw std::domain_error("deg L must be positive on a special curve");
    const PolystablePiece line(deg_line, 1);        // L (x) T
    const PolystablePiece inverse(-deg_line, 1);    // L^-1 (x) T
    const PolystablePiece unitary(Rational(0), 1);  // U, U^vee
    return {
        {"L(x)T -> L^-1(x)T(x)Omega^1_C(log S_C)", line, inverse, -1},
        {"L(x)T -> L^-1(x)T(x)(N^0)^vee", line, inverse, 0},
        {"L(x)T -> U^vee(x)(N^1/N^0)^vee", line, unitary, 1},
        {"U -> U^vee(x)(N^2/N^1)^vee", unitary, unitary, 2},
    };
}

std::array<Rational, 3> thickening_forced_slopes(const Rational& deg_line) {
    std::array<Rational, 3> out{};
    for (const auto& m : weight_one_thickening(deg_line)) {
        Rational s = thickening_normal_slope(m.source, m.target);
        if (m.normal_level < 0) {
            // the tangent direction pairs through L^2 = Omega^1_C(log S_C)
            if (s != Rational(-2) * deg_line) throw std::logic_error("tangent component not slope-preserving");
            continue;
        }
        out[static_cast<std::size_t>(m.normal_level)] = s;
    }
    return out;
}

std::uint64_t fixed_part_rank(const Sl2Decomposition& w) {
    return unitary_rank(w);
}

}  // namespace hodgecheck
