// hodgecheck: command-line front end. Every subcommand writes a JSON report to
// standard output and a one-line summary to standard error. Exit codes:
// 0 the checked property holds, 1 it fails, 2 inconsistent or invalid input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hodgecheck/hodge_lie.hpp"
#include "hodgecheck/rpc.hpp"
#include "hodgecheck/scenario.hpp"
#include "hodgecheck/sl2.hpp"
#include "hodgecheck/verdict.hpp"

using namespace hodgecheck;
using nlohmann::json;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInvalid = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

int emit(json report, const std::string& command, const std::string& summary, int code) {
    report["command"] = command;
    report["schema_version"] = kSchemaVersion;
    std::cout << render(report);
    std::cerr << command << ": " << summary << "\n";
    return code;
}

int rpc_exit(const RpcReport& r) {
    if (r.any_violated()) return kInvalid;
    return r.rpc_holds ? kHolds : kFails;
}

std::string rpc_summary(const RpcReport& r) {
    if (r.any_violated()) return "inconsistent input (a sub slope exceeds the ambient slope)";
    return std::string(r.rpc_holds ? "RPC holds" : "RPC fails") + ", deg N_{C/Y} = " + r.combined_lhs.str() +
           ", r = " + r.r_constant.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relative proportionality and Lie-dimension checks for special subvarieties"};
    app.require_subcommand(1);

    std::string rpc_file;
    auto* rpc = app.add_subcommand("rpc", "General relative proportionality check from a curve document");
    rpc->add_option("file", rpc_file, "JSON document {schema_version, curve}")->required();

    std::uint64_t genus = 0;
    std::uint64_t cusps = 0;
    std::string ranks_text;
    std::string slopes_text;
    auto* rpc_ag = app.add_subcommand("rpc-ag", "Relative proportionality for curves in A_g");
    rpc_ag->add_option("--genus", genus)->required();
    rpc_ag->add_option("--cusps", cusps)->required();
    rpc_ag->add_option("--ranks", ranks_text, "r0,r1,r2: ranks of N^0, N^1/N^0, N^2/N^1")->required();
    rpc_ag->add_option("--slopes", slopes_text, "three slopes as p/q, '-' for a rank-zero level")->required();

    std::string kind_text;
    std::int64_t ksc = 0;
    std::int64_t c2 = 0;
    auto* surface = app.add_subcommand("surface", "Closed-form check for a curve on a Hilbert modular surface or ball quotient");
    surface->add_option("--kind", kind_text)->required()->check(CLI::IsMember({"hilbert", "ball"}));
    surface->add_option("--ksc", ksc, "(K_Y + S_Y).C")->required();
    surface->add_option("--c2", c2, "C^2")->required();

    std::string sl2_text;
    std::uint64_t pow_i = 1;
    std::uint64_t pow_j = 0;
    auto* sl2 = app.add_subcommand("sl2", "Decompose V^{(x)i} (x) (V^vee)^{(x)j} and report its unitary rank");
    sl2->add_option("--v", sl2_text, "decomposition of V as index:multiplicity pairs, e.g. 1:1,0:2")->required();
    sl2->add_option("--i", pow_i);
    sl2->add_option("--j", pow_j);

    std::uint64_t box_k = 1;
    auto* box = app.add_subcommand("box", "Enumerate the Hom index set of End^{-1,1} for weight k");
    box->add_option("--k", box_k)->required()->check(CLI::Range(1, 64));

    int weight = 0;
    std::string hodge_text;
    std::string group_text;
    std::string family_text;
    std::string params_text;
    std::uint64_t dim_hk = 0;
    std::uint64_t dim_y = 0;
    auto* lie = app.add_subcommand("lie", "Hodge decomposition of the Lie algebra, Hermitian test and the dimension condition");
    auto* opt_weight = lie->add_option("--weight", weight);
    auto* opt_hodge = lie->add_option("--hodge", hodge_text, "Hodge numbers h^{k,0},...,h^{0,k}");
    lie->add_option("--group", group_text)->check(CLI::IsMember({"symplectic", "orthogonal"}));
    auto* opt_family = lie->add_option("--family", family_text, "sp, su, so2 or so_star");
    lie->add_option("--params", params_text, "family parameters, comma separated");
    auto* opt_dim_hk = lie->add_option("--dim-hk", dim_hk);
    auto* opt_dim_y = lie->add_option("--dim-y", dim_y);
    opt_weight->needs(opt_hodge);
    opt_hodge->needs(opt_weight);

    std::string verdict_file;
    auto* verdict = app.add_subcommand("verdict", "Evaluate every hypothesis of a scenario document");
    verdict->add_option("file", verdict_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kInvalid;
    }

    try {
        if (*rpc) {
            auto report = rpc_check(parse_rpc_document(read_file(rpc_file)));
            return emit(to_json(report), "rpc", rpc_summary(report), rpc_exit(report));
        }

        if (*rpc_ag) {
            auto r = split(ranks_text, ',');
            auto s = split(slopes_text, ',');
            if (r.size() != 3 || s.size() != 3) throw std::invalid_argument("--ranks and --slopes take three values");
            std::array<std::uint64_t, 3> ranks{};
            std::array<std::optional<Rational>, 3> slopes{};
            for (std::size_t n = 0; n < 3; ++n) {
                ranks[n] = std::stoull(r[n]);
                if (s[n] != "-") slopes[n] = Rational::parse(s[n]);
            }
            auto report = rpc_check_ag(CurveNumerics{genus, cusps}, ranks, slopes);
            json out = to_json(report);
            const std::uint64_t rk0 = ranks[0];
            const std::uint64_t rk1 = ranks[0] + ranks[1];
            out["coefficient"] = (Rational(static_cast<std::int64_t>(rk0 + rk1)) / Rational(2)).str();
            return emit(std::move(out), "rpc-ag", rpc_summary(report), rpc_exit(report));
        }

        if (*surface) {
            const auto kind = kind_text == "hilbert" ? SurfaceKind::hilbert_modular : SurfaceKind::ball_quotient;
            const auto closed = surface_check(kind, ksc, c2);
            json out{{"kind", std::string(to_string(kind))}, {"lhs", closed.lhs}, {"holds", closed.holds}};
            if (ksc + c2 != 0) out["general"] = to_json(surface_from_general(kind, ksc, c2));
            return emit(std::move(out), "surface",
                        std::string(closed.holds ? "holds" : "fails") + " (lhs = " + std::to_string(closed.lhs) + ")",
                        closed.holds ? kHolds : kFails);
        }

        if (*sl2) {
            const auto v = parse_sl2(sl2_text);
            const auto w = tensor_power_decompose(v, pow_i, pow_j);
            json out{{"input", to_json(v)},
                     {"i", pow_i},
                     {"j", pow_j},
                     {"decomposition", to_json(w)},
                     {"total_rank", w.total_rank()},
                     {"unitary_rank", unitary_rank(w)}};
            return emit(std::move(out), "sl2", "unitary rank " + std::to_string(unitary_rank(w)), kHolds);
        }

        if (*box) {
            json tuples = json::array();
            const auto all = enumerate_box(box_k);
            for (const auto& t : all) tuples.push_back({t.mu, t.i, t.nu, t.j, t.a, t.b});
            json out{{"k", box_k}, {"count", all.size()}, {"fields", {"mu", "i", "nu", "j", "a", "b"}}, {"tuples", tuples}};
            return emit(std::move(out), "box", std::to_string(all.size()) + " tuples", kHolds);
        }

        if (*lie) {
            json out;
            int code = kHolds;
            std::string summary;
            const bool have_hodge = opt_hodge->count() > 0;
            const bool have_family = opt_family->count() > 0;
            if (have_hodge == have_family) throw std::invalid_argument("give either --weight/--hodge or --family");
            if (have_hodge) {
                std::vector<std::uint64_t> h;
                for (const auto& x : split(hodge_text, ',')) h.push_back(std::stoull(x));
                const HodgeVector v(weight, h);
                PolarizationGroup group = weight % 2 != 0 ? PolarizationGroup::symplectic : PolarizationGroup::orthogonal;
                if (group_text == "symplectic") group = PolarizationGroup::symplectic;
                if (group_text == "orthogonal") group = PolarizationGroup::orthogonal;
                const auto dims = lie_hodge_dims(v, group);
                const bool herm = is_hermitian_type(dims);
                out["hodge"] = to_json(v);
                out["group"] = std::string(to_string(group));
                out["dims"] = to_json(dims);
                out["dim_horizontal"] = dim_horizontal(dims);
                out["dim_domain"] = dim_domain(dims);
                out["is_hermitian_type"] = herm;
                if (!opt_dim_hk->count() && herm) dim_hk = dim_horizontal(dims);
                summary = herm ? "Hermitian type" : "not of Hermitian type";
                code = herm ? kHolds : kFails;
            } else {
                HermitianFamily f{parse_family(family_text), {}};
                for (const auto& x : split(params_text, ',')) f.params.push_back(std::stoull(x));
                out["family"] = std::string(to_string(f.kind));
                out["params"] = f.params;
                out["hermitian_dim"] = hermitian_dim(f);
                if (!opt_dim_hk->count()) dim_hk = hermitian_dim(f);
                summary = "dim H/K = " + std::to_string(hermitian_dim(f));
            }
            if (opt_dim_y->count()) {
                if (have_hodge && !opt_dim_hk->count() && !out["is_hermitian_type"].get<bool>()) {
                    throw std::invalid_argument("--dim-y needs --dim-hk when the domain is not Hermitian");
                }
                const auto status = check_lie(dim_hk, dim_y);
                out["lie_check"] = {{"dim_hk", dim_hk}, {"dim_y", dim_y}, {"status", std::string(to_string(status))}};
                summary += std::string(", ") + std::string(to_string(status));
                code = status == LieStatus::lie_equality ? kHolds : status == LieStatus::lie_fails ? kFails : kInvalid;
            }
            return emit(std::move(out), "lie", summary, code);
        }

        if (*verdict) {
            const auto report = run_verdict(parse_scenario(read_file(verdict_file)));
            return emit(to_json(report), "verdict", std::string(to_string(report.conclusion)),
                        exit_code(report.conclusion));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
