#include <catch2/catch_amalgamated.hpp>

#include "flatspec/numerals.hpp"
#include "flatspec/verify.hpp"

using namespace flatspec;

TEST_CASE("binary digit sums and support") {
    CHECK(s2(0) == 0);
    CHECK(s2(std::uint64_t{1} << 17) == 1);
    CHECK(s2(7) == 3);
    CHECK(supp(0).empty());
    CHECK(supp(21) == std::vector<int>{0, 2, 4});
}

TEST_CASE("signed-digit representation") {
    const CsdDigits three = to_csd(3);
    CHECK(three.digits == std::vector<int>{-1, 0, 1}); // 4 - 1
    CHECK(to_csd(0).digits.empty());
    CHECK(to_csd(7).digits == std::vector<int>{-1, 0, 0, 1}); // 8 - 1
    CHECK(to_csd(-3).digits == std::vector<int>{1, 0, -1});
    CHECK(to_csd(21).digits == std::vector<int>{1, 0, 1, 0, 1});

    CHECK(s2_star(3) == 2);
    CHECK(s2_star(std::int64_t{1} << 30) == 1);
    CHECK(s2_star(21) == 3);
    CHECK(s2_star(0) == 0);
    CHECK(s2_star(-21) == 3);

    // the rewrite-rule oracle agrees on a window beyond the suite's sweep
    for (std::uint64_t m = (1 << 20); m < (1 << 20) + 500; ++m)
        CHECK(to_csd(static_cast<std::int64_t>(m)).digits == verify_detail::csd_by_rewrite(m));
}

TEST_CASE("digit-sum prefix function") {
    CHECK(psi(1) == 0);
    CHECK(psi(3) == 2);
    for (int k = 1; k <= 20; ++k)
        CHECK(psi(std::uint64_t{1} << k) == BigInt(k) * (std::uint64_t{1} << (k - 1)));
    // naive oracle on a moderate prefix
    CHECK(psi(12345) == verify_detail::naive_psi(12345));
    CHECK_THROWS_AS(psi(0), std::invalid_argument);
}

TEST_CASE("takagi at dyadic rationals") {
    CHECK(takagi_dyadic(DyadicRational{0, 0}) == DyadicRational{0, 0});
    CHECK(takagi_dyadic(DyadicRational{1, 1}) == DyadicRational{1, 1});  // tau(1/2) = 1/2
    CHECK(takagi_dyadic(DyadicRational{1, 0}) == DyadicRational{0, 0});  // tau(1) = 0
    CHECK(takagi_dyadic(DyadicRational::make(1, 2)) == DyadicRational::make(2, 2)); // tau(1/4) = 1/2

    // 2 Psi(3) = t d + 2^d (2x - tau(x)) at t = 3, d = 1, x = 1/2:
    // 2^d 2x = 2(t - 2^d) and 2^d tau(x) = num << (d - exp)
    const DyadicRational tau = takagi_dyadic(DyadicRational{1, 1});
    const std::int64_t rhs = 3 * 1 + 2 * (3 - 2) - (tau.numerator << (1 - tau.exponent));
    CHECK(BigInt(2) * psi(3) == rhs);
    CHECK_THROWS_AS(takagi_dyadic(DyadicRational{3, 1}), std::invalid_argument);
}

TEST_CASE("missing-value counts") {
    CHECK(missing_count_binary(4, 3) == 6);
    CHECK(missing_count_binary(7, 16) == 2);
    CHECK(missing_count_binary(5, 7) == 17);
    CHECK_THROWS_AS(missing_count_binary(4, 0), std::invalid_argument);

    CHECK(missing_count_csd(6, 5) == 8);  // s2*(5) = 2: empty sum, n + 2
    CHECK(missing_count_csd(4, 21) == 15);
    CHECK(missing_count_csd(5, 21) == 23);
    CHECK_THROWS_AS(missing_count_csd(4, 0), std::invalid_argument);
}

TEST_CASE("euler factor truncations") {
    const PhiHalfValue one = euler_phi_half(1);
    CHECK(one.numerator == 1);
    CHECK(one.exponent2 == 1);
    CHECK(euler_phi_half(2).numerator == 3);
    CHECK(euler_phi_half(2).exponent2 == 3);
    CHECK(std::abs(euler_phi_half(40).value() - 0.2888) <= 1e-4);
    CHECK(std::abs(euler_phi_half(64).value() - 0.288788095) <= 1e-6);
    CHECK_THROWS_AS(euler_phi_half(0), std::invalid_argument);
}

TEST_CASE("numerals suite") {
    for (const Check& c : verify_numerals()) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}
