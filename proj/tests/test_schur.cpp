#include <catch2/catch_amalgamated.hpp>
#include <functional>

#include "tsy/schur.hpp"
#include "tsy/space.hpp"

using namespace tsy;

namespace {

// Independent oracle: count semistandard tableaux of shape lambda with
// entries in 1..n (rows weakly increase, columns strictly increase).
int64_t ssyt_count(const Partition& lambda, int n) {
    std::vector<std::vector<int>> fill(lambda.rows());
    for (int i = 0; i < lambda.rows(); ++i) fill[i].assign(lambda.parts[i], 0);
    std::function<int64_t(int, int)> rec = [&](int r, int c) -> int64_t {
        if (r == lambda.rows()) return 1;
        if (c == lambda.parts[r]) return rec(r + 1, 0);
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0 && c < lambda.parts[r - 1]) lo = std::max(lo, fill[r - 1][c] + 1);
        int64_t total = 0;
        for (int v = lo; v <= n; ++v) {
            fill[r][c] = v;
            total += rec(r, c + 1);
        }
        return total;
    };
    return rec(0, 0);
}

}  // namespace

TEST_CASE("schur dimensions, closed forms") {
    for (int n = 1; n <= 5; ++n) {
        for (int t = 1; t <= 4; ++t) {
            REQUIRE(schur_dim(Partition{{t}}, n) == binomial(n + t - 1, t));
            REQUIRE(schur_dim(hook_partition(1, t - 1), n) == binomial(n, t));
        }
    }
    REQUIRE(schur_dim(Partition{{2, 1}}, 2) == 2);
    REQUIRE(schur_dim(Partition{{2, 1}}, 3) == 8);
}

TEST_CASE("schur dimensions match tableau counting") {
    for (int t = 1; t <= 6; ++t)
        for (const auto& lambda : partitions_of(t))
            for (int n = 1; n <= 4; ++n)
                REQUIRE(schur_dim(lambda, n) == ssyt_count(lambda, n));
}

TEST_CASE("conjugation is an involution") {
    for (int t = 1; t <= 7; ++t)
        for (const auto& lambda : partitions_of(t))
            REQUIRE(lambda.conjugate().conjugate() == lambda);
}

TEST_CASE("Cauchy-Littlewood totals") {
    auto r = cauchy_littlewood_dims(2, 2, 2);
    REQUIRE(r.ext_total == 6);
    REQUIRE(r.sym_total == 10);
    auto r1 = cauchy_littlewood_dims(1, 3, 4);
    REQUIRE(r1.ext_total == 12);
    REQUIRE(r1.sym_total == 12);
    REQUIRE(cauchy_littlewood_dims(3, 2, 3).ext_total == 20);
    for (int t = 0; t <= 5; ++t)
        for (int nu = 1; nu <= 4; ++nu)
            for (int nw = 1; nw <= 4; ++nw) {
                auto d = cauchy_littlewood_dims(t, nu, nw);
                REQUIRE(d.ext_total == binomial(static_cast<int64_t>(nu) * nw, t));
                REQUIRE(d.sym_total == binomial(static_cast<int64_t>(nu) * nw + t - 1, t));
            }
}

TEST_CASE("Segre bottom syzygy dimensions") {
    REQUIRE(bottom_syzygy_dims_segre(0, 1, {2, 2, 2, 2}) == 1);
    REQUIRE(bottom_syzygy_dims_segre(1, 1, {3, 3, 3, 2}) == 2);
    REQUIRE(bottom_syzygy_dims_segre(2, 1, {2, 2, 2, 2}) == 0);
    REQUIRE(segre_vanishing_threshold(1, {2, 2, 2, 2}) == 0);
    // everything above the threshold vanishes
    Rat thr = segre_vanishing_threshold(1, {3, 3, 3, 2});
    for (int p = 0; p <= 6; ++p) {
        if (Rat(p) > thr) REQUIRE(bottom_syzygy_dims_segre(p, 1, {3, 3, 3, 2}) == 0);
    }
}

TEST_CASE("two-factor consistency with the Lascoux bottom row") {
    REQUIRE(lascoux_bottom_dims(0, 1, 2, 3) == 3);
    REQUIRE(lascoux_bottom_dims(1, 1, 2, 3) == 2);
    REQUIRE(lascoux_bottom_dims(0, 2, 3, 3) == 1);
    for (int p = 0; p <= 4; ++p)
        for (int q = 1; q <= 3; ++q)
            for (int nu = 1; nu <= 5; ++nu)
                for (int nw = 1; nw <= 5; ++nw)
                    REQUIRE(bottom_syzygy_dims_segre(p, q, {nu, nw}) ==
                            lascoux_bottom_dims(p, q, nu, nw));
}

TEST_CASE("compositions enumerate in colex order") {
    auto c = compositions_of(2, 3);
    REQUIRE(c.size() == 6);
    REQUIRE(c.front() == std::vector<int>{2, 0, 0});
    REQUIRE(c.back() == std::vector<int>{0, 0, 2});
}
