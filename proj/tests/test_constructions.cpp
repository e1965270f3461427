#include <catch2/catch_amalgamated.hpp>

#include "flatspec/analysis.hpp"
#include "flatspec/constructions.hpp"
#include "flatspec/verify.hpp"

using namespace flatspec;

TEST_CASE("lexicographic sets") {
    CHECK(lexicographic(3, 0).empty());
    CHECK(lexicographic(3, 8) == PointSet::full(3));
    const PointSet l4 = lexicographic(3, 4);
    CHECK(l4.points() == std::vector<Point>{0, 1, 2, 3});
    const Flat f = Flat::affine_span(3, l4.points());
    CHECK(f.dim() == 2); // the 2-flat x_2 = 0
    CHECK_THROWS_AS(lexicographic(3, 9), std::invalid_argument);
}

TEST_CASE("evasive size constant") {
    CHECK_THAT(K_constant(2, 3, 2), Catch::Matchers::WithinAbs(1.2016, 5e-4));
    // the implied set size never exceeds the universe, even at maximal c
    CHECK(K_constant(4, 15, 2) * std::pow(2.0, 10 * (1.0 - 4.0 / 15.0)) <= 1024.0);
    CHECK_THROWS_AS(K_constant(2, 2, 2), std::invalid_argument); // c <= k
    CHECK_THROWS_AS(K_constant(1, 2, 2), std::invalid_argument); // c+1 > 2^k
    CHECK_THROWS_AS(K_constant(2, 3, 1), std::invalid_argument);
}

TEST_CASE("evasive sampling size matches the maximizer") {
    CHECK(evasive_sample_size(10, 2, 3) == 16);
    // consistent with K: m* ~ K (c+1)/c 2^{n(1-k/c)}
    const double k_based = K_constant(2, 3, 2) * 4.0 / 3.0 * std::pow(2.0, 10.0 / 3.0);
    CHECK(static_cast<double>(evasive_sample_size(10, 2, 3)) ==
          Catch::Approx(std::floor(k_based)).margin(1));
}

TEST_CASE("evasive generator certifies") {
    const EvasiveResult r = evasive_random({10, 2, 3, 1});
    CHECK(is_evasive(r.set, 2, 3).evasive);
    CHECK(r.set.size() >= 1);
    CHECK(r.set.size() <= r.sample_size);

    // determinism: identical seed, identical set
    const EvasiveResult again = evasive_random({10, 2, 3, 1});
    CHECK(r.set == again.set);
    const EvasiveResult other = evasive_random({10, 2, 3, 2});
    CHECK(is_evasive(other.set, 2, 3).evasive);

    CHECK_THROWS_AS(evasive_random({10, 2, 2, 1}), std::invalid_argument); // c < k+1
    CHECK_THROWS_AS(evasive_random({2, 2, 3, 1}), std::invalid_argument);  // k >= n
}

TEST_CASE("evasiveness certificates") {
    PointSet tiny(6);
    tiny.insert(1);
    tiny.insert(2);
    tiny.insert(60);
    CHECK(is_evasive(tiny, 2, 3).evasive); // |S| <= c

    // a full 2-flat violates c = 3
    PointSet flat(6);
    for (Point p : {0u, 1u, 2u, 3u}) flat.insert(p);
    const EvasiveCheck chk = is_evasive(flat, 2, 3);
    CHECK_FALSE(chk.evasive);
    REQUIRE(chk.witness.has_value());
    CHECK(intersection_size(flat, *chk.witness) == 4);
}

TEST_CASE("union combination") {
    const CombinedSet cs = combine_union(8, 32, 2, 3, 7);
    CHECK(cs.result.size() == 32 + cs.evasive_part.size());
    const PointSet translate = lexicographic(8, 32).translated(cs.translate);
    CHECK(cs.evasive_part.intersect(translate).empty());
    CHECK(is_evasive(cs.evasive_part, 2, 3).evasive);

    // m = 0 keeps the whole evasive set
    const CombinedSet trivial = combine_union(8, 0, 2, 3, 7);
    CHECK(trivial.result == trivial.generation.set);
}

TEST_CASE("difference combination") {
    const CombinedSet cs = combine_difference(8, 200, 2, 3, 7);
    CHECK(cs.result.size() == 200 - cs.evasive_part.size());
    const PointSet translate = lexicographic(8, 200).translated(cs.translate);
    CHECK(cs.evasive_part.subtract(translate).empty()); // removed only translate points
    CHECK(cs.result == translate.subtract(cs.evasive_part));

    // m = 2^n removes the entire evasive set from the full space
    const CombinedSet full = combine_difference(8, 256, 2, 3, 7);
    CHECK(full.result == full.generation.set.complement());
}

TEST_CASE("profiles and constructions suite") {
    for (const Check& c : verify_profiles()) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}
