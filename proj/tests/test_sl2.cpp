#include <random>
#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "hodgecheck/sl2.hpp"
#include "sl2_oracle.hpp"

using namespace hodgecheck;

TEST_CASE("clebsch_gordan") {
    CHECK(clebsch_gordan(1, 1) == Sl2Decomposition{{2, 1}, {0, 1}});
    CHECK(clebsch_gordan(3, 0) == Sl2Decomposition{{3, 1}});
    CHECK(clebsch_gordan(2, 1) == Sl2Decomposition{{3, 1}, {1, 1}});
    CHECK(clebsch_gordan(0, 0) == Sl2Decomposition{{0, 1}});
}

TEST_CASE("clebsch_gordan matches the weight-multiset oracle") {
    for (std::uint64_t a = 0; a <= 8; ++a) {
        for (std::uint64_t b = 0; b <= 8; ++b) {
            const auto w = oracle::product(oracle::weights({{a, 1}}), oracle::weights({{b, 1}}));
            CHECK(clebsch_gordan(a, b) == oracle::decompose(w));
        }
    }
    for (std::uint64_t a = 0; a <= 12; ++a) {
        for (std::uint64_t b = 0; b <= 12; ++b) CHECK(clebsch_gordan(a, b).total_rank() == (a + 1) * (b + 1));
    }
}

TEST_CASE("tensor_decompose") {
    CHECK(tensor_decompose({{1, 1}}, {{1, 1}}) == Sl2Decomposition{{2, 1}, {0, 1}});
    const Sl2Decomposition v{{1, 1}, {0, 1}};
    const auto vv = tensor_decompose(v, v);
    CHECK(vv == Sl2Decomposition{{2, 1}, {1, 2}, {0, 2}});
    CHECK(vv.total_rank() == 9);
    const Sl2Decomposition x{{4, 2}, {1, 3}};
    CHECK(tensor_decompose(x, {{0, 1}}) == x);
    CHECK(tensor_decompose(x, {}) == Sl2Decomposition{});
}

TEST_CASE("dual_decompose is the identity") {
    CHECK(dual_decompose({{1, 2}, {0, 3}}) == Sl2Decomposition{{1, 2}, {0, 3}});
    CHECK(dual_decompose({}) == Sl2Decomposition{});
    CHECK(dual_decompose({{4, 1}}) == Sl2Decomposition{{4, 1}});
}

TEST_CASE("tensor_power_decompose") {
    CHECK(tensor_power_decompose({{1, 1}}, 2, 0) == Sl2Decomposition{{2, 1}, {0, 1}});
    CHECK(tensor_power_decompose({{7, 3}, {2, 1}}, 0, 0) == Sl2Decomposition{{0, 1}});
    CHECK(tensor_power_decompose({{1, 1}, {0, 1}}, 1, 1) == Sl2Decomposition{{2, 1}, {1, 2}, {0, 2}});

    const Sl2Decomposition v{{2, 1}, {1, 2}, {0, 1}};
    for (std::uint64_t i = 0; i <= 3; ++i) {
        for (std::uint64_t j = 0; j <= 2; ++j) {
            oracle::Weights w{{0, 1}};
            for (std::uint64_t n = 0; n < i + j; ++n) w = oracle::product(w, oracle::weights(v));
            const auto got = tensor_power_decompose(v, i, j);
            CHECK(got == oracle::decompose(w));
            std::uint64_t expect_rank = 1;
            for (std::uint64_t n = 0; n < i + j; ++n) expect_rank *= v.total_rank();
            CHECK(got.total_rank() == expect_rank);
        }
    }
}

TEST_CASE("higgs_grading") {
    CHECK(higgs_grading(2, {0, 4}, 1) == GradedBundle{{2, 1}, {0, 1}, {-2, 1}});
    CHECK(higgs_grading(0, {3, 1}, 5) == GradedBundle{{0, 5}});
    CHECK(higgs_grading(1, {0, 3}, 2) == GradedBundle{{Rational(1, 2), 2}, {Rational(-1, 2), 2}});
    CHECK_THROWS_AS(higgs_grading(1, {0, 2}, 1), std::domain_error);

    for (std::uint64_t i = 0; i <= 6; ++i) {
        for (std::uint64_t s = 3; s <= 6; ++s) {
            const auto g = higgs_grading(i, {0, s}, 2);
            CHECK(degree(g) == Rational(0));
            CHECK(g == dual(g));
            CHECK(rank(g) == 2 * (i + 1));
        }
    }
}

TEST_CASE("unitary_rank") {
    CHECK(unitary_rank({{1, 2}, {0, 3}}) == 3);
    CHECK(unitary_rank({}) == 0);
    const auto end_v = tensor_power_decompose({{1, 1}}, 1, 1);
    CHECK(end_v == Sl2Decomposition{{2, 1}, {0, 1}});
    CHECK(unitary_rank(end_v) == 1);
}

TEST_CASE("unitary rank counts slope-zero Higgs-kernel pieces") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> idx(0, 5), mult(1, 4), cusps(3, 8);
    for (int n = 0; n < 300; ++n) {
        Sl2Decomposition x;
        for (int c = 0; c < 3; ++c) x.add(static_cast<std::uint64_t>(idx(rng)), static_cast<std::uint64_t>(mult(rng)));
        const CurveNumerics curve{0, static_cast<std::uint64_t>(cusps(rng))};
        std::uint64_t kernel_at_zero = 0;
        for (const auto& [i, t] : x.components()) {
            // S^{i-2mu}(sigma) kills only the last piece, mu = i
            const auto grading = higgs_grading(i, curve, t);
            const auto& last = grading.pieces().back();
            if (last.slope == Rational(0)) kernel_at_zero += last.rank;
        }
        CHECK(kernel_at_zero == unitary_rank(x));
    }
}

TEST_CASE("tensor_decompose is commutative and associative") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> idx(0, 4), mult(1, 3), count(0, 3);
    auto random_decomposition = [&] {
        Sl2Decomposition x;
        const int n = count(rng);
        for (int c = 0; c < n; ++c) x.add(static_cast<std::uint64_t>(idx(rng)), static_cast<std::uint64_t>(mult(rng)));
        return x;
    };
    for (int n = 0; n < 300; ++n) {
        const auto x = random_decomposition(), y = random_decomposition(), z = random_decomposition();
        CHECK(tensor_decompose(x, y) == tensor_decompose(y, x));
        CHECK(tensor_decompose(tensor_decompose(x, y), z) == tensor_decompose(x, tensor_decompose(y, z)));
        CHECK(tensor_decompose(x, y).total_rank() == x.total_rank() * y.total_rank());
    }
}

namespace {

// exhaustive search over [0, k]^6
std::vector<BoxTuple> brute_force_box(std::uint64_t k) {
    std::vector<BoxTuple> out;
    for (std::uint64_t mu = 0; mu <= k; ++mu)
        for (std::uint64_t i = 0; i <= k; ++i)
            for (std::uint64_t nu = 0; nu <= k; ++nu)
                for (std::uint64_t j = 0; j <= k; ++j)
                    for (std::uint64_t a = 0; a <= k; ++a)
                        for (std::uint64_t b = 0; b <= k; ++b) {
                            const auto lhs = static_cast<long>(j + b) - static_cast<long>(nu);
                            const auto rhs = static_cast<long>(i + a) - static_cast<long>(mu) - 1;
                            if (mu <= i && nu <= j && a + i <= k && b + j <= k && lhs == rhs) {
                                out.push_back({mu, i, nu, j, a, b});
                            }
                        }
    return out;
}

}  // namespace

TEST_CASE("enumerate_box") {
    const auto k1 = enumerate_box(1);
    CHECK(k1.size() == 4);
    CHECK(std::find(k1.begin(), k1.end(), BoxTuple{0, 1, 0, 0, 0, 0}) != k1.end());
    CHECK(std::find(k1.begin(), k1.end(), BoxTuple{0, 0, 0, 0, 1, 0}) != k1.end());
    for (std::uint64_t k = 1; k <= 4; ++k) {
        const auto got = enumerate_box(k);
        CHECK(got == brute_force_box(k));
        for (const auto& t : got) {
            CHECK(in_box(t, k));
            CHECK(static_cast<long>(t.j + t.b) - static_cast<long>(t.nu) ==
                  static_cast<long>(t.i + t.a) - static_cast<long>(t.mu) - 1);
        }
    }
    CHECK_FALSE(in_box({0, 2, 0, 0, 0, 1}, 1));
}
