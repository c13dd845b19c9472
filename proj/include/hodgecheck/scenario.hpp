#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hodgecheck/bundle.hpp"
#include "hodgecheck/hodge_lie.hpp"
#include "hodgecheck/rpc.hpp"

namespace hodgecheck {

inline constexpr int kSchemaVersion = 1;

/// Malformed or invalid input document. `where` is either "line L, column C"
/// for syntax errors or a field path such as "curves[0].sub_levels[1].slope".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

enum class AmbientKind { ag, general, hilbert_surface, ball_surface };

std::string_view to_string(AmbientKind k);

/// One special curve. Which fields are present depends on the ambient kind:
///   general          genus, cusps, ambient_levels, sub_levels
///   ag               genus, cusps, sub_levels (levels 0..2; ambient is derived)
///   *_surface        ks_dot_c, c_squared
struct CurveSpec {
    std::string name;
    std::optional<CurveNumerics> numerics;
    std::optional<std::vector<PolystablePiece>> ambient_levels;
    std::vector<SubLevel> sub_levels;
    std::optional<std::int64_t> ks_dot_c;
    std::optional<std::int64_t> c_squared;

    friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

struct SubvarietySpec {
    std::uint64_t dim_y = 0;
    bool asserted_big = false;
    bool asserted_connected_union = false;
    bool asserted_unipotent_monodromy = false;

    friend bool operator==(const SubvarietySpec&, const SubvarietySpec&) = default;
};

/// Exactly one of dim_hk and family is set.
struct LieSpec {
    std::optional<std::uint64_t> dim_hk;
    std::optional<HermitianFamily> family;

    std::uint64_t resolved_dim_hk() const;

    friend bool operator==(const LieSpec&, const LieSpec&) = default;
};

/// weight and hodge_numbers are either both present or both absent.
struct AmbientSpec {
    AmbientKind kind = AmbientKind::general;
    std::optional<int> weight;
    std::optional<std::vector<std::uint64_t>> hodge_numbers;

    friend bool operator==(const AmbientSpec&, const AmbientSpec&) = default;
};

struct ScenarioDocument {
    int schema_version = kSchemaVersion;
    std::vector<CurveSpec> curves;
    SubvarietySpec subvariety;
    LieSpec lie;
    AmbientSpec ambient;

    friend bool operator==(const ScenarioDocument&, const ScenarioDocument&) = default;
};

/// Parses and fully validates a scenario document (JSON). Throws ParseError.
ScenarioDocument parse_scenario(std::string_view text);

/// Canonical JSON text of a scenario; parse_scenario inverts it.
std::string serialize_scenario(const ScenarioDocument& doc);

/// The RPC instance a curve describes under the given ambient kind.
RpcInput curve_rpc_input(const CurveSpec& curve, AmbientKind kind);

/// Parses the document read by the `rpc` subcommand:
///   {"schema_version": 1, "curve": {genus, cusps, ambient_levels, sub_levels}}
RpcInput parse_rpc_document(std::string_view text);

}  // namespace hodgecheck
