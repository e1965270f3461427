#include <catch2/catch_amalgamated.hpp>

#include "flatspec/analysis.hpp"
#include "flatspec/field.hpp"

using namespace flatspec;

TEST_CASE("smallest irreducible polynomials") {
    CHECK(smallest_irreducible(1) == 0b10);
    CHECK(smallest_irreducible(2) == 0b111);
    CHECK(smallest_irreducible(3) == 0b1011);
    CHECK(smallest_irreducible(8) == 0b100011011); // x^8+x^4+x^3+x+1
    CHECK_THROWS_AS(smallest_irreducible(0), std::invalid_argument);
    CHECK_THROWS_AS(smallest_irreducible(17), std::invalid_argument);
}

TEST_CASE("field multiplication in GF(4)") {
    const std::uint32_t mod = smallest_irreducible(2);
    const FieldElement t(2, 0b10, mod);
    const FieldElement one(2, 1, mod);
    const FieldElement zero(2, 0, mod);
    CHECK((t * t).poly() == 0b11); // t^2 = t + 1
    CHECK((t * one).poly() == t.poly());
    CHECK((t * zero).poly() == 0);
    CHECK((t + t).poly() == 0);

    const FieldElement other(2, 1, 0b111);
    CHECK_THROWS_AS(FieldElement(2, 1, 0b110), std::invalid_argument); // reducible modulus
    CHECK_THROWS_AS(FieldElement(2, 4, mod), std::out_of_range);
}

TEST_CASE("cubing construction") {
    const PointSet b2 = bose_set(2);
    CHECK(b2.points() == std::vector<Point>{0, 3}); // x^3 = x over GF(2)
    const PointSet b4 = bose_set(4);
    CHECK(b4.size() == 4);
    CHECK(is_sidon(b4).sidon);
    for (int n : {6, 8, 10}) {
        const PointSet b = bose_set(n);
        CHECK(b.size() == (std::uint64_t{1} << (n / 2)));
        CHECK(is_sidon(b).sidon);
    }
    CHECK_THROWS_AS(bose_set(3), std::invalid_argument);
    CHECK_THROWS_AS(bose_set(0), std::invalid_argument);
}
