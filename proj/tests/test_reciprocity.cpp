#include "gapcomp/io.hpp"
#include "gapcomp/reciprocity.hpp"

#include "golden.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <vector>

using namespace gapcomp;

namespace {

long oracle_signed_last(int n, int m, int g, int s)
{
    long total = 0;
    oracle::all_partitions(n, [&](const std::vector<int>& p) {
        if (!p.empty() && p.back() == m && oracle::gap_partition_ok(p, g, s))
            total += (p.size() % 2 == 1) ? 1 : -1;
    });
    return total;
}

long oracle_m_step(int n, int m, int g, int s)
{
    long count = 0;
    oracle::all_compositions(n, [&](const std::vector<int>& c) {
        count += oracle::gap_composition_ok(c, g, s) && oracle::m_step_ok(c, m);
    });
    return count;
}

long oracle_compositions(int k, int g, int s)
{
    long count = 0;
    oracle::all_compositions(k, [&](const std::vector<int>& c) { count += oracle::gap_composition_ok(c, g, s); });
    return count;
}

} // namespace

TEST_CASE("published g = 2 blocks")
{
    CHECK(build_mu(GapClass(2, 1), 12) == golden::to_triangle(golden::mu_2_1));
    CHECK(build_gamma(GapClass(2, 1), 12) == golden::to_triangle(golden::gamma_2_1));
    CHECK(build_gamma(GapClass(2, 1), 20).leading_block(12) == golden::to_triangle(golden::gamma_2_1));
}

TEST_CASE("Triangle basics")
{
    Triangle t(3);
    CHECK_THROWS_AS(t.set(1, 2, 5), std::invalid_argument);
    t.set(1, 2, 0);
    CHECK_THROWS_AS(t.at(0, 1), std::out_of_range);
    CHECK_THROWS_AS(t.at(4, 1), std::out_of_range);
    CHECK(t.at(1, 3) == 0);
    CHECK(triangle_mul(Triangle::identity(5), build_gamma(GapClass(1, 1), 5)) == build_gamma(GapClass(1, 1), 5));
    CHECK_THROWS_AS(triangle_mul(Triangle(3), Triangle(4)), std::invalid_argument);
}

TEST_CASE("unit diagonals")
{
    for (int g = 0; g <= 4; ++g)
        for (int s = 1; s <= 3; ++s) {
            auto gamma = build_gamma(GapClass(g, s), 15);
            for (int i = 1; i <= 15; ++i)
                CHECK(gamma.at(i, i) == 1);
            if (g >= 1) {
                auto mu = build_mu(GapClass(g, s), 15);
                for (int i = 1; i <= 15; ++i)
                    CHECK(mu.at(i, i) == 1);
            }
        }
    CHECK_THROWS_AS(build_mu(GapClass(0, 1), 5), std::invalid_argument);
}

TEST_CASE("entries agree with enumeration")
{
    for (int g = 1; g <= 3; ++g)
        for (int s = 1; s <= 2; ++s) {
            auto mu = build_mu(GapClass(g, s), 12);
            auto gamma = build_gamma(GapClass(g, s), 12);
            for (int i = 1; i <= 12; ++i)
                for (int j = 1; j <= i; ++j) {
                    CAPTURE(g);
                    CAPTURE(s);
                    CAPTURE(i);
                    CAPTURE(j);
                    CHECK(mu.at(i, j) == oracle_signed_last(i + g + s - 1, j + g + s - 1, g, s));
                    CHECK(gamma.at(i, j) == oracle_m_step(i - j, j + s - 1, g, s));
                }
        }
}

TEST_CASE("mu and gamma are mutually inverse")
{
    for (int g = 1; g <= 4; ++g)
        for (int s = 1; s <= 3; ++s) {
            auto check = check_inverse(GapClass(g, s), 20);
            CAPTURE(g);
            CAPTURE(s);
            CHECK(check.holds);
            CHECK_FALSE(check.failure);
            CHECK(unit_triangle_inverse(build_gamma(GapClass(g, s), 20)) == build_mu(GapClass(g, s), 20));
        }
}

TEST_CASE("a corrupted entry is located")
{
    auto mu = build_mu(GapClass(3, 2), 14);
    auto gamma = build_gamma(GapClass(3, 2), 14);
    gamma.set(9, 4, gamma.at(9, 4) + 1);
    auto check = check_inverse_pair(mu, gamma);
    CHECK_FALSE(check.holds);
    REQUIRE(check.failure);
    CHECK(check.failure->row == 9);
    CHECK(check.failure->col == 4);
    REQUIRE(check.gamma_suspect);
    CHECK(*check.gamma_suspect == std::pair{9, 4});
    CHECK_FALSE(check.mu_suspect == std::optional<std::pair<int, int>>{std::pair{9, 4}});
}

TEST_CASE("unit_triangle_inverse")
{
    Triangle t = Triangle::identity(3);
    t.set(2, 1, 4);
    t.set(3, 1, -2);
    t.set(3, 2, 7);
    CHECK(triangle_mul(t, unit_triangle_inverse(t)) == Triangle::identity(3));
    t.set(2, 2, 2);
    CHECK_THROWS_AS(unit_triangle_inverse(t), std::domain_error);
}

TEST_CASE("gamma_product and tuple_count edge cases")
{
    CHECK(gamma_product({}, 1, 6) == Triangle::identity(6));
    CHECK(tuple_count({}, 1, 0) == 1);
    CHECK(tuple_count({}, 1, 3) == 0);
    const std::vector<int> single{2};
    CHECK(gamma_product(single, 1, 8) == build_gamma(GapClass(2, 1), 8));
    CHECK(tuple_count(single, 1, 6) == oracle_compositions(6, 2, 1));
}

TEST_CASE("gamma stabilizes to composition counts")
{
    const int dim = 24;
    for (int g = 0; g <= 3; ++g)
        for (int s = 1; s <= 3; ++s) {
            auto gamma = build_gamma(GapClass(g, s), dim);
            for (int k = 0; k <= 8; ++k)
                for (int n = stable_row(k, s); n <= dim; ++n) {
                    CAPTURE(g);
                    CAPTURE(s);
                    CAPTURE(k);
                    CAPTURE(n);
                    CHECK(gamma.at(n, n - k) == oracle_compositions(k, g, s));
                }
        }
}

TEST_CASE("products of gammas stabilize to tuple counts")
{
    const int dim = 22;
    const std::vector<std::vector<int>> tuples{{0, 1}, {1, 0}, {2, 3}, {1, 1, 2}, {0, 0}};
    for (const auto& gs : tuples)
        for (int s = 1; s <= 2; ++s) {
            auto product = gamma_product(gs, s, dim);
            for (int k = 0; k <= 8; ++k) {
                const Integer expected = tuple_count(gs, s, k);
                for (int n = stable_row(k, s); n <= dim; ++n)
                    CHECK(product.at(n, n - k) == expected);
            }
        }
}

TEST_CASE("gamma_0 gamma_1 counts overpartitions")
{
    const std::vector<int> a{0, 1}, b{1, 0};
    auto p = gamma_product(a, 1, 20);
    auto q = gamma_product(b, 1, 20);
    for (int k = 0; k <= 8; ++k)
        for (int n = stable_row(k, 1); n <= 20; ++n) {
            CHECK(p.at(n, n - k) == oracle::overpartitions(k));
            CHECK(q.at(n, n - k) == oracle::overpartitions(k));
        }
}

TEST_CASE("first two gamma columns coincide for g >= 1")
{
    for (int g = 1; g <= 3; ++g) {
        auto gamma = build_gamma(GapClass(g, 1), 16);
        for (int i = 2; i <= 16; ++i)
            CHECK(gamma.at(i, 1) == gamma.at(i, 2));
    }
}

TEST_CASE("row just below the stabilization bound")
{
    for (int s = 1; s <= 2; ++s)
        for (int k = 1; k <= 6; ++k) {
            const int n = 2 * k - s;
            if (n - k < 1)
                continue;
            auto gamma = build_gamma(GapClass(2, s), n);
            MESSAGE("g=2 s=" << s << " k=" << k << " row " << n << ": " << to_string(gamma.at(n, n - k)) << " vs "
                             << oracle_compositions(k, 2, s));
        }
}

TEST_CASE("CSV and JSON round trips")
{
    auto mu = build_mu(GapClass(2, 1), 10);
    CHECK(triangle_from_csv(triangle_to_csv(mu)) == mu);
    auto doc = triangle_from_json(triangle_to_json(mu, {"mu", {2}, 1}));
    CHECK(doc.matrix == mu);
    CHECK(doc.meta.kind == "mu");
    CHECK(doc.meta.gs == std::vector<int>{2});

    Triangle big(2);
    big.set(1, 1, 1);
    big.set(2, 2, 1);
    big.set(2, 1, Integer("123456789012345678901234567890"));
    auto j = triangle_to_json(big, {"gamma", {1}, 1});
    CHECK(triangle_from_json(j).matrix == big);
    CHECK(triangle_from_csv(triangle_to_csv(big)) == big);

    CHECK_THROWS_AS(triangle_from_csv("1,0\n1\n"), FormatError);
    CHECK_THROWS_AS(triangle_from_csv("1,2\n0,1\n"), FormatError);
}
