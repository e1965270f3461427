#include <catch2/catch_amalgamated.hpp>

#include "flatspec/constructions.hpp"
#include "flatspec/hypercube.hpp"
#include "flatspec/verify.hpp"

using namespace flatspec;

TEST_CASE("induced and crossing edges") {
    PointSet single(4);
    single.insert(9);
    CHECK(induced_edges(4, single) == 0);
    CHECK(crossing_edges(4, single) == 4);

    const PointSet all = PointSet::full(4);
    CHECK(induced_edges(4, all) == 4 * 8); // n 2^{n-1}
    CHECK(crossing_edges(4, all) == 0);

    PointSet edge(3);
    edge.insert(0);
    edge.insert(1);
    CHECK(induced_edges(3, edge) == 1);
    CHECK(crossing_edges(3, edge) == 4);

    // half-cube x_0 = 0: a perfect matching crosses
    PointSet half(4);
    for (Point p = 0; p < 16; p += 2) half.insert(p);
    CHECK(crossing_edges(4, half) == 8);

    CHECK(crossing_edges(3, PointSet(3)) == 0);
    CHECK_THROWS_AS(induced_edges(3, PointSet(4)), std::invalid_argument);
}

TEST_CASE("minimum cut formula") {
    CHECK(min_cut_size(3, 2) == 4);
    CHECK(min_cut_size(4, 1) == 4);
    CHECK(min_cut_size(4, 8) == 8);   // half cube
    CHECK(min_cut_size(5, 16) == 16); // 2^{n-1} again
    CHECK_THROWS_AS(min_cut_size(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(min_cut_size(3, 8), std::invalid_argument);
}

TEST_CASE("cut lower bound") {
    CHECK(cut_lower_bound(3, 1) == 4);
    CHECK(cut_lower_bound(4, 3) == 8);
    CHECK(cut_lower_bound(4, 2) == 8);
    CHECK(cut_lower_bound(5, 4) == 16); // half-cube case d = n-1
    CHECK_THROWS_AS(cut_lower_bound(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(cut_lower_bound(3, -1), std::invalid_argument);
}

TEST_CASE("lexicographic cuts are optimal") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t t = 1; t < (std::uint64_t{1} << n); ++t) {
            CHECK(BigInt(induced_edges(n, lexicographic(n, t))) == psi(t));
            CHECK(BigInt(crossing_edges(n, lexicographic(n, t))) == min_cut_size(n, t));
        }
}

TEST_CASE("multi-cube cut bound") {
    PointSet vertex(3);
    vertex.insert(0);
    std::vector<PointSet> parts = {vertex, vertex};
    CHECK(multi_cube_cut_check(3, 2, 1, parts)); // 6 crossing edges >= 4

    // k = 1 consistency with the single-cube bound
    PointSet half(3);
    for (Point p = 0; p < 4; ++p) half.insert(p);
    std::vector<PointSet> one = {half};
    CHECK(multi_cube_cut_check(3, 1, 1, one));

    std::vector<PointSet> bad = {PointSet(3), vertex};
    CHECK_THROWS_WITH(multi_cube_cut_check(3, 2, 1, bad),
                      Catch::Matchers::ContainsSubstring("part 0: empty side"));
    std::vector<PointSet> big = {PointSet::full(3), vertex};
    CHECK_THROWS_WITH(multi_cube_cut_check(3, 2, 1, big),
                      Catch::Matchers::ContainsSubstring("part 0: side larger"));
    CHECK_THROWS_WITH(multi_cube_cut_check(3, 2, 2, parts),
                      Catch::Matchers::ContainsSubstring("d <= n-2"));
}

TEST_CASE("cube suite") {
    for (const Check& c : verify_cube()) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}
