#include "hodgecheck/verdict.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hodgecheck {

using nlohmann::json;

std::string_view to_string(Conclusion c) {
    switch (c) {
        case Conclusion::special_shimura_type_conditional: return "special_shimura_type_conditional";
        case Conclusion::not_special_rpc_fails: return "not_special_rpc_fails";
        case Conclusion::not_special_lie_fails: return "not_special_lie_fails";
        case Conclusion::inconclusive_missing_assertions: return "inconclusive_missing_assertions";
        case Conclusion::inconsistent_input: return "inconsistent_input";
    }
    return "?";
}

int exit_code(Conclusion c) {
    switch (c) {
        case Conclusion::special_shimura_type_conditional: return 0;
        case Conclusion::inconsistent_input: return 2;
        default: return 1;
    }
}

VerdictReport run_verdict(const ScenarioDocument& s) {
    VerdictReport v;
    for (const auto& c : s.curves) {
        v.per_curve_rpc.push_back({c.name, rpc_check(curve_rpc_input(c, s.ambient.kind))});
    }
    v.dim_hk = s.lie.resolved_dim_hk();
    v.dim_y = s.subvariety.dim_y;
    v.lie_status = check_lie(v.dim_hk, v.dim_y);
    v.big_asserted = s.subvariety.asserted_big;
    v.unipotent_asserted = s.subvariety.asserted_unipotent_monodromy;
    v.connected_union_asserted = s.subvariety.asserted_connected_union;

    if (s.ambient.weight && s.ambient.hodge_numbers) {
        AmbientLieSummary a;
        const HodgeVector hv(*s.ambient.weight, *s.ambient.hodge_numbers);
        a.group = hv.weight() % 2 != 0 ? PolarizationGroup::symplectic : PolarizationGroup::orthogonal;
        a.dims = lie_hodge_dims(hv, a.group);
        a.horizontal = dim_horizontal(a.dims);
        a.domain = dim_domain(a.dims);
        a.hermitian = is_hermitian_type(a.dims);
        v.ambient_lie = std::move(a);
    }

    const auto& curves = v.per_curve_rpc;
    const bool violated = std::any_of(curves.begin(), curves.end(),
                                      [](const CurveVerdict& c) { return c.rpc.any_violated(); });
    const bool rpc_ok = std::all_of(curves.begin(), curves.end(),
                                    [](const CurveVerdict& c) { return c.rpc.rpc_holds; });

    if (violated || v.lie_status == LieStatus::inconsistent) {
        v.conclusion = Conclusion::inconsistent_input;
    } else if (!rpc_ok) {
        v.conclusion = Conclusion::not_special_rpc_fails;
    } else if (v.lie_status == LieStatus::lie_fails) {
        v.conclusion = Conclusion::not_special_lie_fails;
    } else if (!v.big_asserted || !v.unipotent_asserted) {
        v.conclusion = Conclusion::inconclusive_missing_assertions;
    } else {
        v.conclusion = Conclusion::special_shimura_type_conditional;
    }
    return v;
}

json to_json(const RpcReport& r) {
    json levels = json::array();
    for (const auto& l : r.per_level) {
        json e;
        e["level"] = l.level;
        e["ambient_slope"] = l.ambient_slope.str();
        e["sub_slope"] = l.sub_slope ? json(l.sub_slope->str()) : json(nullptr);
        e["sub_rank"] = l.sub_rank;
        e["status"] = std::string(to_string(l.status));
        levels.push_back(std::move(e));
    }
    return {
        {"per_level", std::move(levels)},
        {"r_constant", r.r_constant.str()},
        {"combined_lhs", r.combined_lhs.str()},
        {"combined_rhs", r.combined_rhs.str()},
        {"log_tangent_degree", r.log_tangent_degree.str()},
        {"rpc_holds", r.rpc_holds},
    };
}

json to_json(const Sl2Decomposition& d) {
    json out = json::array();
    for (const auto& [i, m] : d.components()) out.push_back({{"sym_power", i}, {"multiplicity", m}});
    return out;
}

json to_json(const LieHodgeDims& d) {
    json out = json::array();
    for (const auto& [p, n] : d) out.push_back({{"p", p}, {"dim", n}});
    return out;
}

json to_json(const std::vector<PolystablePiece>& pieces) {
    json out = json::array();
    for (const auto& p : pieces) out.push_back({{"slope", p.slope.str()}, {"rank", p.rank}});
    return out;
}

json to_json(const HodgeVector& v) {
    return {{"weight", v.weight()}, {"hodge_numbers", v.numbers()}};
}

json to_json(const VerdictReport& r) {
    json out;
    out["conclusion"] = std::string(to_string(r.conclusion));
    out["conditional_on"] = {"asserted_big", "asserted_unipotent_monodromy"};
    out["note"] =
        "Zariski density of monodromy (BIG) and unipotent local monodromy are taken from the "
        "scenario's assertions and are never computed; a positive conclusion is conditional on them.";
    json curves = json::array();
    for (const auto& c : r.per_curve_rpc) curves.push_back({{"name", c.name}, {"rpc", to_json(c.rpc)}});
    out["curves"] = std::move(curves);
    out["lie"] = {
        {"dim_hk", r.dim_hk},
        {"dim_y", r.dim_y},
        {"status", std::string(to_string(r.lie_status))},
    };
    out["assertions"] = {
        {"asserted_big", r.big_asserted},
        {"asserted_unipotent_monodromy", r.unipotent_asserted},
        {"asserted_connected_union", r.connected_union_asserted},
    };
    if (r.ambient_lie) {
        out["ambient_lie"] = {
            {"group", std::string(to_string(r.ambient_lie->group))},
            {"dims", to_json(r.ambient_lie->dims)},
            {"dim_horizontal", r.ambient_lie->horizontal},
            {"dim_domain", r.ambient_lie->domain},
            {"is_hermitian_type", r.ambient_lie->hermitian},
        };
    }
    return out;
}

Sl2Decomposition parse_sl2(std::string_view text) {
    Sl2Decomposition out;
    auto read = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw std::invalid_argument("malformed decomposition \"" + std::string(text) + "\"");
        }
        return v;
    };
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("decomposition entries are index:multiplicity, got \"" + std::string(item) + "\"");
        }
        out.add(read(item.substr(0, colon)), read(item.substr(colon + 1)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string render(const json& report) {
    return report.dump(2) + "\n";
}

}  // namespace hodgecheck
