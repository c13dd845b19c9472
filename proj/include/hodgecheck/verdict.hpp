#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hodgecheck/hodge_lie.hpp"
#include "hodgecheck/rpc.hpp"
#include "hodgecheck/scenario.hpp"
#include "hodgecheck/sl2.hpp"

namespace hodgecheck {

enum class Conclusion {
    special_shimura_type_conditional,
    not_special_rpc_fails,
    not_special_lie_fails,
    inconclusive_missing_assertions,
    inconsistent_input,
};

std::string_view to_string(Conclusion c);

/// Process exit code: 0 when the checked property holds, 1 when it fails on
/// well-formed input, 2 for inconsistent or invalid input.
int exit_code(Conclusion c);

struct CurveVerdict {
    std::string name;
    RpcReport rpc;

    friend bool operator==(const CurveVerdict&, const CurveVerdict&) = default;
};

/// Period-domain data derived from the ambient Hodge numbers, when given.
struct AmbientLieSummary {
    PolarizationGroup group = PolarizationGroup::symplectic;
    LieHodgeDims dims;
    std::uint64_t horizontal = 0;
    std::uint64_t domain = 0;
    bool hermitian = false;

    friend bool operator==(const AmbientLieSummary&, const AmbientLieSummary&) = default;
};

struct VerdictReport {
    std::vector<CurveVerdict> per_curve_rpc;
    std::uint64_t dim_hk = 0;
    std::uint64_t dim_y = 0;
    LieStatus lie_status = LieStatus::lie_fails;
    bool big_asserted = false;
    bool unipotent_asserted = false;
    bool connected_union_asserted = false;
    std::optional<AmbientLieSummary> ambient_lie;
    Conclusion conclusion = Conclusion::inconsistent_input;

    friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

/// Evaluates every hypothesis of the criterion on a validated scenario.
/// Gates are applied in this order: inconsistent data (a violated slope level
/// or dim H/K < dim Y), a failing RPC level, dim H/K > dim Y, then the
/// (BIG) and unipotent-monodromy assertions. Those two are never computed;
/// a positive conclusion is conditional on them.
VerdictReport run_verdict(const ScenarioDocument& s);

nlohmann::json to_json(const RpcReport& r);
nlohmann::json to_json(const Sl2Decomposition& d);
nlohmann::json to_json(const LieHodgeDims& d);
nlohmann::json to_json(const VerdictReport& r);
nlohmann::json to_json(const std::vector<PolystablePiece>& pieces);
nlohmann::json to_json(const HodgeVector& v);

/// Parses "2:1,0:3" (index:multiplicity pairs). Throws std::invalid_argument.
Sl2Decomposition parse_sl2(std::string_view text);

/// Stable textual rendering used for every report on standard output.
std::string render(const nlohmann::json& report);

}  // namespace hodgecheck
