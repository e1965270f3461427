#include <catch2/catch_amalgamated.hpp>

#include "flatspec/analysis.hpp"
#include "flatspec/constructions.hpp"
#include "flatspec/field.hpp"
#include "flatspec/verify.hpp"

using namespace flatspec;

TEST_CASE("profiles") {
    CHECK(profile(PointSet(3), 2).sizes == std::vector<std::uint64_t>{0});
    CHECK(profile(PointSet::full(3), 2).sizes == std::vector<std::uint64_t>{4});
    CHECK(profile(lexicographic(3, 4), 2).sizes == std::vector<std::uint64_t>{0, 2, 4});
}

TEST_CASE("forcing relation") {
    // m = 5 is not a power of two, so a [2,3]-flat is unavoidable
    CHECK(forces(3, 5, 2, 3).forced);
    const ForcesResult r = forces(3, 4, 2, 3);
    CHECK_FALSE(r.forced);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->size() == 4);
    const Profile wp = profile(*r.witness, 2);
    CHECK(std::count(wp.sizes.begin(), wp.sizes.end(), 3) == 0);

    CHECK(forces(3, 0, 2, 0).forced);
    CHECK(forces(4, 0, 3, 0).forced);
    CHECK_FALSE(forces(3, 0, 2, 1).forced);

    CHECK_THROWS_AS(forces(5, 3, 2, 1), std::invalid_argument); // needs the opt-in
    CHECK_THROWS_AS(forces(6, 3, 2, 1, {true, false, 1}), std::invalid_argument);
    CHECK_THROWS_AS(forces(3, 9, 2, 1), std::invalid_argument);
}

TEST_CASE("forcing with workers and pruning agrees") {
    for (int k = 1; k <= 3; ++k)
        for (int t = 0; t <= (1 << k); ++t)
            for (std::uint64_t m = 0; m <= 8; ++m) {
                const bool plain = forces(3, m, k, t).forced;
                CHECK(plain == forces(3, m, k, t, {false, true, 1}).forced);
                CHECK(plain == forces(3, m, k, t, {false, false, 3}).forced);
            }
    // witnesses are canonical regardless of worker count (m = 8 avoids t = 3)
    const ForcesResult a = forces(4, 8, 2, 3, {false, false, 1});
    const ForcesResult b = forces(4, 8, 2, 3, {false, false, 4});
    REQUIRE((!a.forced && !b.forced));
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("spectra") {
    CHECK(spectrum(3, 1, 2).members == std::vector<std::uint64_t>{2, 3, 4, 5, 6, 7, 8});
    CHECK(spectrum(3, 2, 1).members == std::vector<std::uint64_t>{1, 2, 3, 5});
    CHECK(spectrum(2, 2, 4).members == std::vector<std::uint64_t>{4});
    const Spectrum sp = spectrum(4, 3, 4);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t m = 4; m <= 12; ++m) expected.push_back(m);
    CHECK(sp.members == expected);
    CHECK(sp.density == Catch::Approx(9.0 / 16.0));
    CHECK(sp.method == "exhaustive");
}

TEST_CASE("closed-form spectra") {
    const auto s10 = closed_form_spectrum(5, 1, 0);
    REQUIRE(s10.has_value());
    CHECK(s10->members.front() == 0);
    CHECK(s10->members.back() == 30);
    CHECK(s10->members.size() == 31);

    const auto s22 = closed_form_spectrum(4, 2, 2);
    REQUIRE(s22.has_value());
    CHECK(s22->members.front() == 2);
    CHECK(s22->members.back() == 14);

    CHECK_FALSE(closed_form_spectrum(4, 2, 4).has_value()); // Sidon case
    CHECK_FALSE(closed_form_spectrum(4, 2, 0).has_value());
    CHECK_FALSE(closed_form_spectrum(4, 4, 7).has_value());
    CHECK(closed_form_spectrum(4, 3, 4)->method == "closed-form");
}

TEST_CASE("sidon detection") {
    PointSet two(4);
    two.insert(3);
    two.insert(9);
    CHECK(is_sidon(two).sidon);

    PointSet flat(4);
    for (Point p : {0u, 1u, 2u, 3u}) flat.insert(p);
    const SidonCheck chk = is_sidon(flat);
    CHECK_FALSE(chk.sidon);
    REQUIRE(chk.witness.has_value());
    CHECK(chk.witness->dim() == 2);
    CHECK(intersection_size(flat, *chk.witness) == 4);

    CHECK(is_sidon(bose_set(6)).sidon);
}

TEST_CASE("difference counts") {
    PointSet pair(3);
    pair.insert(0);
    pair.insert(5);
    const DiffCounts dc = diff_counts(pair);
    CHECK(dc.counts[5] == 1);
    CHECK(dc.sum_of_squares() == 1);

    // full 2-flat: each nonzero difference appears twice
    PointSet flat(2);
    for (Point p : {0u, 1u, 2u, 3u}) flat.insert(p);
    const DiffCounts df = diff_counts(flat);
    CHECK(df.counts[1] == 2);
    CHECK(df.counts[2] == 2);
    CHECK(df.counts[3] == 2);

    const DiffCounts full = diff_counts(PointSet::full(4));
    for (Point v = 1; v < 16; ++v) CHECK(full.counts[v] == 8);
}

TEST_CASE("additive energy") {
    PointSet single(3);
    single.insert(6);
    CHECK(additive_energy(single) == 1);

    PointSet flat(2);
    for (Point p : {0u, 1u, 2u, 3u}) flat.insert(p);
    CHECK(additive_energy(flat) == 64); // m^3 on a flat

    PointSet three(3);
    three.insert(0);
    three.insert(1);
    three.insert(2);
    CHECK(additive_energy(three) == 21);
    CHECK(f23_from_energy(three) == 1);
    CHECK(flat_statistics(three, 2)[3] == 1);
}

TEST_CASE("flat statistics") {
    PointSet three(3);
    three.insert(0);
    three.insert(1);
    three.insert(2);
    const auto hist = flat_statistics(three, 2);
    CHECK(hist[3] == 1);

    const Point dir[1] = {1};
    PointSet flat2(2);
    for (Point p : {0u, 1u, 2u, 3u}) flat2.insert(p);
    CHECK(flat_statistics_directed(flat2, dir)[2] == 2);

    const Point dirs2[2] = {1, 2};
    const auto empty_hist = flat_statistics_directed(PointSet(4), dirs2);
    CHECK(empty_hist[0] == 4); // 2^{n-d} empty cosets

    const Point dependent[2] = {3, 3};
    CHECK_THROWS_AS(flat_statistics_directed(PointSet(4), dependent), std::invalid_argument);
}

TEST_CASE("least absolute residue") {
    CHECK(least_absolute_residue(8, 8) == 0);
    CHECK(least_absolute_residue(5, 8) == 3);
    CHECK(least_absolute_residue(7, 16) == 7);
    CHECK(least_absolute_residue(-3, 8) == 3);
    CHECK_THROWS_AS(least_absolute_residue(5, 0), std::invalid_argument);
}

TEST_CASE("most frequent difference") {
    PointSet pair(4);
    pair.insert(2);
    pair.insert(11);
    CHECK(most_frequent_difference(pair) == std::pair<Point, std::uint32_t>{9, 1});
    CHECK(most_frequent_difference(PointSet::full(3)) == std::pair<Point, std::uint32_t>{1, 4});
    PointSet single(3);
    single.insert(1);
    CHECK_THROWS_AS(most_frequent_difference(single), std::invalid_argument);
}

TEST_CASE("full flat search edge cases") {
    PointSet single(4);
    single.insert(3);
    CHECK_FALSE(find_full_flat(single, 1).has_value());
    CHECK_FALSE(find_full_flat(PointSet(4), 2).has_value());
    CHECK_THROWS_AS(find_full_flat(single, 0), std::invalid_argument);

    PointSet pair(4);
    pair.insert(3);
    pair.insert(9);
    const auto line = find_full_flat(pair, 1);
    REQUIRE(line.has_value());
    CHECK(line->dim() == 1);
    CHECK(intersection_size(pair, *line) == 2);
}

TEST_CASE("energy bound report") {
    PointSet flat(4);
    for (Point p = 0; p < 8; ++p) flat.insert(p);
    const EnergyBoundReport r = energy_bound_check(flat, 0.5, 0.25);
    CHECK_FALSE(r.premise_holds); // residue of 8 vanishes
    CHECK(r.weak_bound_holds);
    CHECK(r.energy == r.weak_bound);

    CHECK_THROWS_AS(energy_bound_check(flat, 0.4, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(energy_bound_check(flat, 0.8, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(energy_bound_check(PointSet(4), 0.5, 0.25), std::invalid_argument);
}

TEST_CASE("threshold constants") {
    CHECK(order2_constant(1) == 2.0);
    CHECK(order2_constant(2) == Catch::Approx(2.5));
    CHECK(order2_constant(3) == Catch::Approx(2.09).margin(0.005));
    for (int k = 2; k <= 10; ++k) CHECK(order2_constant(k) <= 2.5 + 1e-12);
    CHECK(full_flat_threshold(4, 2) == 10.0);
}

TEST_CASE("small-spectra and energy suites") {
    for (const Check& c : verify_small_spectra()) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
    for (const Check& c : verify_energy()) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}
