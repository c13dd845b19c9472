// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All checks are exact; the wall-clock budgets are part of
// each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hodgecheck/bundle.hpp"
#include "hodgecheck/hodge_lie.hpp"
#include "hodgecheck/rpc.hpp"
#include "hodgecheck/scenario.hpp"
#include "hodgecheck/sl2.hpp"
#include "hodgecheck/verdict.hpp"
#include "sl2_oracle.hpp"

using namespace hodgecheck;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double budget_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs > budget_seconds) {
        out.ok = false;
        out.detail = "over time budget of " + std::to_string(budget_seconds) + " s";
    }
    if (!out.ok) ++failures;
    std::printf("[%s] %d. %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, out.ok ? "" : ": ",
                out.detail.c_str());
}

CurveNumerics curve_with_tangent_degree(std::int64_t t) {
    // genus 0 with s cusps has deg T_C(-log) = 2 - s
    return CurveNumerics{0, static_cast<std::uint64_t>(2 - t)};
}

const char* kAllPass = R"({
  "schema_version": 1,
  "ambient": {"kind": "ag", "weight": 1, "hodge_numbers": [2, 2]},
  "subvariety": {"dim_y": 3, "asserted_big": true, "asserted_connected_union": true,
                 "asserted_unipotent_monodromy": true},
  "lie": {"dim_hk": 3},
  "curves": [
    {"name": "C1", "genus": 0, "cusps": 4,
     "sub_levels": [{"level": 0, "slope": "-2", "rank": 1},
                    {"level": 1, "slope": "-1", "rank": 2},
                    {"level": 2, "slope": "0", "rank": 1}]}
  ]
})";

std::string mutate(std::string s, const std::string& from, const std::string& to) {
    const auto pos = s.find(from);
    if (pos == std::string::npos) throw std::logic_error("mutation anchor not found: " + from);
    return s.replace(pos, from.size(), to);
}

}  // namespace

int main() {
    criterion(1, "surface closed forms agree with the general inequality (r = 1, r = 1/2)", 1.0, [] {
        Outcome o;
        int cases = 0;
        for (std::int64_t ksc = -30; ksc <= 30; ++ksc) {
            for (std::int64_t c2 = -30; c2 <= 30; ++c2) {
                if (ksc + c2 == 0) continue;
                for (auto kind : {SurfaceKind::hilbert_modular, SurfaceKind::ball_quotient}) {
                    const auto general = surface_from_general(kind, ksc, c2);
                    const auto closed = surface_check(kind, ksc, c2);
                    const Rational r = kind == SurfaceKind::hilbert_modular ? Rational(1) : Rational(1, 2);
                    const std::int64_t coeff = kind == SurfaceKind::hilbert_modular ? 2 : 3;
                    o.require(closed.lhs == ksc + coeff * c2, "closed-form lhs");
                    o.require(general.rpc_holds == closed.holds,
                              "disagreement at ksc=" + std::to_string(ksc) + " c2=" + std::to_string(c2));
                    o.require(general.r_constant == r, "r constant");
                    ++cases;
                }
            }
        }
        o.require(cases == 2 * (61 * 61 - 61), "case count");
        return o;
    });

    criterion(2, "A_g coefficient (rk N^1 + rk N^0)/2 reproduced on the equality branch", 1.0, [] {
        Outcome o;
        for (std::int64_t t = -1; t >= -10; --t) {
            const auto curve = curve_with_tangent_degree(t);
            const Rational tangent(t);
            for (std::uint64_t r0 = 0; r0 <= 6; ++r0) {
                for (std::uint64_t r1 = 0; r1 <= 6; ++r1) {
                    for (std::uint64_t r2 = 0; r2 <= 6; ++r2) {
                        std::array<std::optional<Rational>, 3> slopes{};
                        if (r0) slopes[0] = tangent;
                        if (r1) slopes[1] = tangent / Rational(2);
                        if (r2) slopes[2] = Rational(0);
                        const auto rep = rpc_check_ag(curve, {r0, r1, r2}, slopes);
                        const Rational rk_n0(static_cast<std::int64_t>(r0));
                        const Rational rk_n1(static_cast<std::int64_t>(r0 + r1));
                        const Rational expected = (rk_n1 + rk_n0) / Rational(2) * tangent;
                        o.require(rep.rpc_holds, "equality branch did not hold");
                        o.require(rep.combined_rhs == expected,
                                  "rhs " + rep.combined_rhs.str() + " != " + expected.str());
                        o.require(rep.combined_lhs == rep.combined_rhs, "lhs != rhs under equality");
                    }
                }
            }
        }
        return o;
    });

    criterion(3, "same-slope thickening forces mu(N^0) = deg T_C, mu(N^1/N^0) = deg T_C / 2, mu(N^2/N^1) = 0", 1.0, [] {
        Outcome o;
        for (const Rational d : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
            const auto forced = thickening_forced_slopes(d);
            o.require(forced[0] == Rational(-2) * d, "mu(N^0) != -2 deg L");
            o.require(forced[1] == -d, "mu(N^1/N^0) != -deg L");
            o.require(forced[2] == Rational(0), "mu(N^2/N^1) != 0");
            // compare with the A_g table for a curve with this deg L: 2g - 2 + s = 2d
            const auto cusps = static_cast<std::uint64_t>((Rational(2) * d + Rational(2)).num());
            const CurveNumerics curve{0, cusps};
            o.require(deg_L(curve) == d, "test curve has wrong deg L");
            const auto ambient = ag_input(curve, {1, 1, 1}, {Rational(0), Rational(0), Rational(0)}).ambient();
            for (std::size_t i = 0; i < 3; ++i) o.require(ambient[i].slope == forced[i], "A_g table mismatch");
            o.require(forced[0] == deg_log_tangent(curve), "mu(N^0) != deg T_C");
        }
        return o;
    });

    criterion(4, "Clebsch-Gordan equals weight-multiset decomposition; dimensions conserved", 1.0, [] {
        Outcome o;
        for (std::uint64_t a = 0; a <= 8; ++a) {
            for (std::uint64_t b = 0; b <= 8; ++b) {
                const auto w = oracle::product(oracle::weights({{a, 1}}), oracle::weights({{b, 1}}));
                o.require(clebsch_gordan(a, b) == oracle::decompose(w),
                          "mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b));
            }
        }
        for (std::uint64_t a = 0; a <= 12; ++a) {
            for (std::uint64_t b = 0; b <= 12; ++b) {
                o.require(clebsch_gordan(a, b).total_rank() == (a + 1) * (b + 1), "dimension not conserved");
            }
        }
        return o;
    });

    criterion(5, "Lie dimensions: Sym^2 route = sp(2g), Lambda^2 route = so(2,n), Hermitian dichotomy", 1.0, [] {
        Outcome o;
        for (std::uint64_t g = 1; g <= 6; ++g) {
            const auto d = lie_hodge_dims(HodgeVector(1, {g, g}), PolarizationGroup::symplectic);
            o.require(dim_horizontal(d) == g * (g + 1) / 2, "sp horizontal");
            o.require(dim_horizontal(d) == hermitian_dim({HermitianFamilyKind::sp, {g}}), "sp closed form");
            o.require(is_hermitian_type(d), "sp not Hermitian");
        }
        for (std::uint64_t n = 1; n <= 10; ++n) {
            const auto d = lie_hodge_dims(HodgeVector(2, {1, n, 1}), PolarizationGroup::orthogonal);
            o.require(dim_horizontal(d) == n, "so(2,n) horizontal");
            o.require(dim_horizontal(d) == hermitian_dim({HermitianFamilyKind::so2n, {n}}), "so(2,n) closed form");
            o.require(is_hermitian_type(d), "so(2,n) not Hermitian");
        }
        for (std::uint64_t a = 2; a <= 6; ++a) {
            for (std::uint64_t b = 0; b <= 10; ++b) {
                const auto d = lie_hodge_dims(HodgeVector(2, {a, b, a}), PolarizationGroup::orthogonal);
                o.require(!is_hermitian_type(d), "(a,b,a) with a >= 2 reported Hermitian");
            }
        }
        return o;
    });

    criterion(6, "slope decomposition: idempotent, rank/degree preserving, strictly increasing (10^4 bundles)", 5.0, [] {
        Outcome o;
        std::mt19937 rng(6);
        std::uniform_int_distribution<int> count(0, 8), num(-12, 12), den(1, 6), rk(1, 7);
        for (int n = 0; n < 10000; ++n) {
            std::vector<PolystablePiece> pieces;
            const int m = count(rng);
            for (int i = 0; i < m; ++i) pieces.emplace_back(Rational(num(rng), den(rng)), static_cast<std::uint64_t>(rk(rng)));
            const GradedBundle b(std::move(pieces));
            const auto f = slope_decompose(b);
            o.require(slope_decompose(f.as_bundle()) == f, "not idempotent");
            o.require(rank(f.as_bundle()) == rank(b), "rank changed");
            o.require(degree(f.as_bundle()) == degree(b), "degree changed");
            for (std::size_t i = 1; i < f.levels(); ++i) o.require(f[i - 1].slope < f[i].slope, "slopes not increasing");
        }
        return o;
    });

    criterion(7, "index-set enumeration matches exhaustive search (k = 1 gives 4 tuples; k <= 4)", 1.0, [] {
        Outcome o;
        o.require(enumerate_box(1).size() == 4, "k = 1 count");
        for (std::uint64_t k = 1; k <= 4; ++k) {
            std::vector<BoxTuple> brute;
            for (std::uint64_t mu = 0; mu <= k; ++mu)
                for (std::uint64_t i = 0; i <= k; ++i)
                    for (std::uint64_t nu = 0; nu <= k; ++nu)
                        for (std::uint64_t j = 0; j <= k; ++j)
                            for (std::uint64_t a = 0; a <= k; ++a)
                                for (std::uint64_t b = 0; b <= k; ++b) {
                                    const long lhs = static_cast<long>(j + b) - static_cast<long>(nu);
                                    const long rhs = static_cast<long>(i + a) - static_cast<long>(mu) - 1;
                                    if (mu <= i && nu <= j && i + a <= k && j + b <= k && lhs == rhs) {
                                        brute.push_back({mu, i, nu, j, a, b});
                                    }
                                }
            o.require(enumerate_box(k) == brute, "mismatch at k=" + std::to_string(k));
        }
        return o;
    });

    criterion(8, "end-to-end verdict and single-hypothesis mutations; byte-identical reports", 1.0, [] {
        Outcome o;
        auto conclude = [](const std::string& doc) { return run_verdict(parse_scenario(doc)).conclusion; };
        o.require(conclude(kAllPass) == Conclusion::special_shimura_type_conditional, "all-pass scenario");
        o.require(conclude(mutate(kAllPass, R"("slope": "-1")", R"("slope": "-3/2")")) ==
                      Conclusion::not_special_rpc_fails,
                  "RPC mutation");
        o.require(conclude(mutate(kAllPass, R"("dim_hk": 3)", R"("dim_hk": 6)")) == Conclusion::not_special_lie_fails,
                  "LIE mutation");
        o.require(conclude(mutate(kAllPass, R"("asserted_big": true)", R"("asserted_big": false)")) ==
                      Conclusion::inconclusive_missing_assertions,
                  "BIG mutation");
        const auto first = render(to_json(run_verdict(parse_scenario(kAllPass))));
        for (int n = 0; n < 20; ++n) {
            o.require(render(to_json(run_verdict(parse_scenario(kAllPass)))) == first, "report not byte-identical");
        }
        return o;
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
