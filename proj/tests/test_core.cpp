#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "flatspec/counting.hpp"
#include "flatspec/flat.hpp"
#include "flatspec/point_set.hpp"
#include "flatspec/quotient.hpp"

using namespace flatspec;

TEST_CASE("gaussian binomial values") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(4, 0, 2) == 1);
    CHECK(gaussian_binomial(7, 0, 5) == 1);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(5, 5, 2) == 1);
    CHECK_THROWS_AS(gaussian_binomial(3, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_binomial(3, 1, 1), std::invalid_argument);
}

TEST_CASE("flat counts") {
    CHECK(count_k_flats(3, 2, 2) == 14);
    CHECK(count_k_flats(4, 4, 2) == 1);
    CHECK(count_k_flats(6, 6, 3) == 1);
    CHECK(count_k_flats(4, 2, 2) == 140);
    // symmetry of the subspace count
    CHECK(gaussian_binomial(9, 3, 2) == gaussian_binomial(9, 6, 2));
}

TEST_CASE("point set basics") {
    PointSet s(3);
    CHECK(s.universe_size() == 8);
    s.insert(5);
    s.insert(5);
    CHECK(s.size() == 1);
    CHECK(s.contains(5));
    s.erase(5);
    CHECK(s.empty());
    CHECK_THROWS_AS(s.insert(8), std::out_of_range);
    CHECK_THROWS_AS(PointSet(0), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(25), std::invalid_argument);

    const PointSet full = PointSet::full(3);
    CHECK(full.size() == 8);
    CHECK(full.complement().empty());
    const PointSet moved = full.translated(3);
    CHECK(moved == full);
}

TEST_CASE("flat canonical form") {
    // span{001,010} written with redundant generators collapses to one form
    const Point basis_a[2] = {1, 2};
    const Point basis_b[2] = {3, 2}; // 3 = 1 ^ 2
    const Flat a(3, basis_a, 4);
    const Flat b(3, basis_b, 5); // offset differs by a basis element
    CHECK(a == Flat(3, basis_a, 5));
    CHECK(a == b);
    CHECK(a.offset() == 4);
    CHECK(a.dim() == 2);
    CHECK(a.point_count() == 4);
    CHECK(a.contains(4));
    CHECK(a.contains(7));
    CHECK_FALSE(a.contains(0));

    const Point dependent[2] = {3, 3};
    CHECK_THROWS_AS(Flat(3, dependent, 0), std::invalid_argument);

    const Point pts[4] = {4, 5, 6, 7};
    const Flat spanned = Flat::affine_span(3, pts);
    CHECK(spanned == a);
    CHECK(Flat::affine_span(3, std::vector<Point>{6}).dim() == 0);
}

TEST_CASE("flat enumeration is exact and duplicate-free") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            std::set<Flat> seen;
            std::uint64_t count = 0;
            for_each_k_flat(n, k, [&](const Flat& f) {
                ++count;
                seen.insert(f);
                REQUIRE(f.dim() == k);
            });
            CHECK(BigInt(count) == count_k_flats(n, k, 2));
            CHECK(seen.size() == count);
        }
    CHECK_THROWS_AS(FlatEnumerator(15, 2), std::invalid_argument);
}

TEST_CASE("intersection sizes") {
    const PointSet full = PointSet::full(3);
    const PointSet empty(3);
    PointSet three(3);
    three.insert(0);
    three.insert(1);
    three.insert(2);
    const Point basis[2] = {1, 2};
    const Flat plane(3, basis, 0);
    CHECK(intersection_size(full, plane) == 4);
    CHECK(intersection_size(empty, plane) == 0);
    CHECK(intersection_size(three, plane) == 3);
    CHECK_THROWS_AS(intersection_size(PointSet(4), plane), std::invalid_argument);
}

TEST_CASE("balanced hyperplane") {
    // m = 5 at n = 3: the scan must land inside [m/2 - sqrt(m)/2, m/2 + sqrt(m)/2]
    PointSet s(3);
    for (Point p : {0u, 1u, 2u, 3u, 4u}) s.insert(p);
    const Flat h = balanced_hyperplane(s);
    const double cnt = static_cast<double>(intersection_size(s, h));
    CHECK(std::abs(cnt - 2.5) <= std::sqrt(5.0) / 2);
    CHECK(h.dim() == 2);
    CHECK(h.contains(0));
    // ties resolve to the smallest normal word: a = 001, so x_0 = 0 wins
    const Point kernel_basis[2] = {4, 2};
    CHECK(h == Flat(3, kernel_basis, 0));
    CHECK(cnt == 3.0);

    const PointSet full = PointSet::full(4);
    CHECK(intersection_size(full, balanced_hyperplane(full)) == 8);
    const PointSet empty(4);
    CHECK(intersection_size(empty, balanced_hyperplane(empty)) == 0);
}

TEST_CASE("quotient maps") {
    const QuotientMap q = quotient_by(2, 1);
    CHECK(q.apply(0) == q.apply(1));
    CHECK(q.apply(2) == q.apply(3));
    CHECK(q.apply(0) != q.apply(2));

    const QuotientMap q3 = quotient_by(3, 6);
    CHECK(q3.apply(6) == 0);
    for (Point y = 0; y < 4; ++y) CHECK(q3.apply(q3.section(y)) == y);

    CHECK_THROWS_AS(quotient_by(3, 0), std::invalid_argument);

    // fibers of d=001 are the four pairs {x, x+1}
    const QuotientMap q1 = quotient_by(3, 1);
    for (Point x = 0; x < 8; ++x) CHECK(q1.apply(x) == q1.apply(x ^ 1));
}

TEST_CASE("coset count pushforward") {
    const QuotientMap q = quotient_by(3, 1);
    CHECK(push_coset_counts(PointSet::full(3), q, 2) == PointSet::full(2));
    CHECK(push_coset_counts(PointSet(3), q, 0) == PointSet::full(2));
    PointSet s(3);
    s.insert(0);
    s.insert(1);
    s.insert(6);
    CHECK(push_coset_counts(s, q, 2).size() == 1);
    CHECK(push_coset_counts(s, q, 1).size() == 1);
    CHECK(push_coset_counts(s, q, 0).size() == 2);
    CHECK_THROWS_AS(push_coset_counts(s, q, 3), std::invalid_argument);
}
