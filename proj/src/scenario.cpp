#include "hodgecheck/scenario.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>

#include "json.hpp"

namespace hodgecheck {

using nlohmann::json;

namespace {

/// Cursor into the document that remembers its field path for error messages.
class Node {
public:
    Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

    const json& value() const { return value_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(path_.empty() ? "<root>" : path_, what); }

    void expect_object(std::initializer_list<std::string_view> allowed) const {
        if (!value_.is_object()) fail("expected an object");
        for (const auto& [key, _] : value_.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                throw ParseError(child_path(key), "unknown field");
            }
        }
    }

    bool has(std::string_view key) const { return value_.contains(key); }

    Node at(std::string_view key) const {
        if (!value_.contains(key)) fail("missing field \"" + std::string(key) + "\"");
        return Node(value_.at(std::string(key)), child_path(key));
    }

    std::vector<Node> elements() const {
        if (!value_.is_array()) fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < value_.size(); ++i) {
            out.emplace_back(value_[i], path_ + "[" + std::to_string(i) + "]");
        }
        return out;
    }

    std::int64_t as_int() const {
        if (!value_.is_number_integer()) fail("expected an integer");
        if (value_.is_number_unsigned() &&
            value_.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            fail("integer out of range");
        }
        return value_.get<std::int64_t>();
    }

    std::uint64_t as_uint() const {
        auto v = as_int();
        if (v < 0) fail("expected a nonnegative integer");
        return static_cast<std::uint64_t>(v);
    }

    std::uint64_t as_positive() const {
        auto v = as_uint();
        if (v == 0) fail("expected a positive integer");
        return v;
    }

    bool as_bool() const {
        if (!value_.is_boolean()) fail("expected true or false");
        return value_.get<bool>();
    }

    std::string as_string() const {
        if (!value_.is_string()) fail("expected a string");
        return value_.get<std::string>();
    }

    Rational as_rational() const {
        if (value_.is_number_integer()) return Rational(as_int());
        if (!value_.is_string()) fail("expected a rational as \"p/q\" string or an integer");
        try {
            return Rational::parse(value_.get<std::string>());
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

private:
    std::string child_path(std::string_view key) const {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    const json& value_;
    std::string path_;
};

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // byte is one past the offending character
        throw ParseError(line_column(text, e.byte > 0 ? e.byte - 1 : 0), "malformed document");
    }
}

void check_schema_version(const Node& root) {
    auto v = root.at("schema_version").as_int();
    if (v != kSchemaVersion) {
        root.at("schema_version").fail("unsupported schema version " + std::to_string(v));
    }
}

AmbientKind parse_kind(const Node& n) {
    auto s = n.as_string();
    if (s == "ag") return AmbientKind::ag;
    if (s == "general") return AmbientKind::general;
    if (s == "hilbert_surface") return AmbientKind::hilbert_surface;
    if (s == "ball_surface") return AmbientKind::ball_surface;
    n.fail("unknown ambient kind \"" + s + "\"");
}

PolystablePiece parse_piece(const Node& n) {
    n.expect_object({"slope", "rank"});
    return PolystablePiece(n.at("slope").as_rational(), n.at("rank").as_positive());
}

SubLevel parse_sub_level(const Node& n) {
    n.expect_object({"level", "slope", "rank"});
    return SubLevel{n.at("level").as_uint(), PolystablePiece(n.at("slope").as_rational(), n.at("rank").as_positive())};
}

CurveSpec parse_curve(const Node& n, AmbientKind kind) {
    n.expect_object({"name", "genus", "cusps", "ambient_levels", "sub_levels", "ks_dot_c", "c_squared"});
    CurveSpec c;
    if (n.has("name")) c.name = n.at("name").as_string();

    const bool surface = kind == AmbientKind::hilbert_surface || kind == AmbientKind::ball_surface;
    if (surface) {
        for (auto key : {"genus", "cusps", "ambient_levels", "sub_levels"}) {
            if (n.has(key)) n.at(key).fail("not used for surface scenarios; give ks_dot_c and c_squared");
        }
        c.ks_dot_c = n.at("ks_dot_c").as_int();
        c.c_squared = n.at("c_squared").as_int();
    } else {
        for (auto key : {"ks_dot_c", "c_squared"}) {
            if (n.has(key)) n.at(key).fail("only used for surface scenarios");
        }
        c.numerics = CurveNumerics{n.at("genus").as_uint(), n.at("cusps").as_uint()};
        if (kind == AmbientKind::general) {
            std::vector<PolystablePiece> amb;
            for (const auto& e : n.at("ambient_levels").elements()) amb.push_back(parse_piece(e));
            c.ambient_levels = std::move(amb);
        } else if (n.has("ambient_levels")) {
            n.at("ambient_levels").fail("derived from genus and cusps for the A_g kind; remove it");
        }
        if (n.has("sub_levels")) {
            for (const auto& e : n.at("sub_levels").elements()) c.sub_levels.push_back(parse_sub_level(e));
        }
    }

    // run the engine's own validation now, so errors carry the curve's location
    try {
        (void)rpc_check(curve_rpc_input(c, kind));
    } catch (const std::exception& e) {
        n.fail(e.what());
    }
    return c;
}

HermitianFamily parse_family_node(const Node& n) {
    HermitianFamily f{};
    try {
        f.kind = parse_family(n.at("family").as_string());
    } catch (const std::invalid_argument& e) {
        n.at("family").fail(e.what());
    }
    for (const auto& e : n.at("params").elements()) f.params.push_back(e.as_uint());
    try {
        (void)hermitian_dim(f);
    } catch (const std::invalid_argument& e) {
        n.at("params").fail(e.what());
    }
    return f;
}

json rational_json(const Rational& r) {
    return r.str();
}

json curve_json(const CurveSpec& c) {
    json out;
    out["name"] = c.name;
    if (c.numerics) {
        out["genus"] = c.numerics->genus;
        out["cusps"] = c.numerics->cusps;
    }
    if (c.ambient_levels) {
        out["ambient_levels"] = json::array();
        for (const auto& p : *c.ambient_levels) {
            out["ambient_levels"].push_back({{"slope", rational_json(p.slope)}, {"rank", p.rank}});
        }
    }
    if (c.numerics) {
        out["sub_levels"] = json::array();
        for (const auto& s : c.sub_levels) {
            out["sub_levels"].push_back(
                {{"level", s.level}, {"slope", rational_json(s.quotient.slope)}, {"rank", s.quotient.rank}});
        }
    }
    if (c.ks_dot_c) out["ks_dot_c"] = *c.ks_dot_c;
    if (c.c_squared) out["c_squared"] = *c.c_squared;
    return out;
}

}  // namespace

std::string_view to_string(AmbientKind k) {
    switch (k) {
        case AmbientKind::ag: return "ag";
        case AmbientKind::general: return "general";
        case AmbientKind::hilbert_surface: return "hilbert_surface";
        case AmbientKind::ball_surface: return "ball_surface";
    }
    return "?";
}

std::uint64_t LieSpec::resolved_dim_hk() const {
    if (dim_hk) return *dim_hk;
    if (family) return hermitian_dim(*family);
    throw std::logic_error("lie spec has neither dim_hk nor family");
}

RpcInput curve_rpc_input(const CurveSpec& curve, AmbientKind kind) {
    switch (kind) {
        case AmbientKind::hilbert_surface:
        case AmbientKind::ball_surface:
            return surface_input(kind == AmbientKind::hilbert_surface ? SurfaceKind::hilbert_modular
                                                                      : SurfaceKind::ball_quotient,
                                 curve.ks_dot_c.value(), curve.c_squared.value());
        case AmbientKind::ag: {
            std::array<std::uint64_t, 3> ranks{};
            std::array<std::optional<Rational>, 3> slopes{};
            for (const auto& s : curve.sub_levels) {
                if (s.level >= 3) throw std::invalid_argument("A_g sub levels are 0, 1 and 2");
                if (ranks[s.level] != 0) throw std::invalid_argument("sub level " + std::to_string(s.level) + " given twice");
                ranks[s.level] = s.quotient.rank;
                slopes[s.level] = s.quotient.slope;
            }
            return ag_input(curve.numerics.value(), ranks, slopes);
        }
        case AmbientKind::general:
            break;
    }
    return RpcInput(curve.numerics.value(), SlopeFiltration(curve.ambient_levels.value()), curve.sub_levels);
}

ScenarioDocument parse_scenario(std::string_view text) {
    const json doc = parse_json(text);
    const Node root(doc, "");
    root.expect_object({"schema_version", "curves", "subvariety", "lie", "ambient"});
    check_schema_version(root);

    ScenarioDocument s;

    const Node amb = root.at("ambient");
    amb.expect_object({"kind", "weight", "hodge_numbers"});
    s.ambient.kind = parse_kind(amb.at("kind"));
    if (amb.has("weight") != amb.has("hodge_numbers")) amb.fail("weight and hodge_numbers go together");
    if (amb.has("weight")) {
        const auto w = amb.at("weight").as_int();
        if (w < -64 || w > 64) amb.at("weight").fail("weight out of range");
        std::vector<std::uint64_t> h;
        for (const auto& e : amb.at("hodge_numbers").elements()) h.push_back(e.as_uint());
        try {
            const HodgeVector hv(static_cast<int>(w), h);
            if (s.ambient.kind == AmbientKind::ag && w % 2 == 0) amb.at("weight").fail("A_g needs odd weight");
        } catch (const std::invalid_argument& e) {
            amb.at("hodge_numbers").fail(e.what());
        }
        s.ambient.weight = static_cast<int>(w);
        s.ambient.hodge_numbers = std::move(h);
    }

    const Node sub = root.at("subvariety");
    sub.expect_object({"dim_y", "asserted_big", "asserted_connected_union", "asserted_unipotent_monodromy"});
    s.subvariety.dim_y = sub.at("dim_y").as_uint();
    s.subvariety.asserted_big = sub.at("asserted_big").as_bool();
    s.subvariety.asserted_connected_union = sub.at("asserted_connected_union").as_bool();
    s.subvariety.asserted_unipotent_monodromy = sub.at("asserted_unipotent_monodromy").as_bool();

    const Node lie = root.at("lie");
    lie.expect_object({"dim_hk", "family", "params"});
    if (lie.has("dim_hk") == lie.has("family")) lie.fail("give exactly one of dim_hk or family");
    if (lie.has("dim_hk")) {
        if (lie.has("params")) lie.at("params").fail("params belong with family");
        s.lie.dim_hk = lie.at("dim_hk").as_uint();
    } else {
        s.lie.family = parse_family_node(lie);
    }

    const auto curves = root.at("curves").elements();
    if (curves.empty()) root.at("curves").fail("at least one curve is required");
    for (const auto& c : curves) s.curves.push_back(parse_curve(c, s.ambient.kind));

    return s;
}

std::string serialize_scenario(const ScenarioDocument& doc) {
    json out;
    out["schema_version"] = doc.schema_version;

    json& amb = out["ambient"];
    amb["kind"] = std::string(to_string(doc.ambient.kind));
    if (doc.ambient.weight) amb["weight"] = *doc.ambient.weight;
    if (doc.ambient.hodge_numbers) amb["hodge_numbers"] = *doc.ambient.hodge_numbers;

    out["subvariety"] = {
        {"dim_y", doc.subvariety.dim_y},
        {"asserted_big", doc.subvariety.asserted_big},
        {"asserted_connected_union", doc.subvariety.asserted_connected_union},
        {"asserted_unipotent_monodromy", doc.subvariety.asserted_unipotent_monodromy},
    };

    json& lie = out["lie"];
    if (doc.lie.dim_hk) lie["dim_hk"] = *doc.lie.dim_hk;
    if (doc.lie.family) {
        lie["family"] = std::string(to_string(doc.lie.family->kind));
        lie["params"] = doc.lie.family->params;
    }

    out["curves"] = json::array();
    for (const auto& c : doc.curves) out["curves"].push_back(curve_json(c));
    return out.dump(2) + "\n";
}

RpcInput parse_rpc_document(std::string_view text) {
    const json doc = parse_json(text);
    const Node root(doc, "");
    root.expect_object({"schema_version", "curve"});
    check_schema_version(root);
    const Node n = root.at("curve");
    CurveSpec c = parse_curve(n, AmbientKind::general);
    return curve_rpc_input(c, AmbientKind::general);
}

}  // namespace hodgecheck
