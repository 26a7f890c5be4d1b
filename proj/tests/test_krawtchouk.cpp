#include "hamq/krawtchouk.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using hamq::ExactInt;
using hamq::ExactRational;
using hamq::KrawtchoukParams;

TEST_CASE("binomial values and conventions", "[krawtchouk][binomial]") {
    CHECK(hamq::binomial(4, 2) == 6);
    CHECK(hamq::binomial(8, 4) == 70);
    for (int n = 0; n <= 30; ++n) CHECK(hamq::binomial(n, 0) == 1);
    CHECK(hamq::binomial(5, -1) == 0);
    CHECK(hamq::binomial(5, 6) == 0);
    CHECK_THROWS_AS(hamq::binomial(-1, 0), std::invalid_argument);

    for (int n = 0; n <= 60; ++n) {
        for (int k = 0; k <= n; ++k) REQUIRE(hamq::binomial(n, k) == oracle::choose(n, k));
    }
    // beyond 64-bit range
    CHECK(hamq::binomial(100, 50) == ExactInt("100891344545564193334812497256"));
}

TEST_CASE("KrawtchoukParams rejects invalid triples", "[krawtchouk]") {
    CHECK_THROWS_AS(KrawtchoukParams(0, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(KrawtchoukParams(3, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(KrawtchoukParams(3, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(KrawtchoukParams(3, 2, -1), std::invalid_argument);
}

TEST_CASE("kraw_eval examples", "[krawtchouk][kraw_eval]") {
    CHECK(hamq::kraw_eval({4, 2, 2}, 2) == -2);
    CHECK(hamq::kraw_eval({3, 2, 1}, 3) == -3);
    for (int x = 0; x <= 7; ++x) CHECK(hamq::kraw_eval({7, 3, 0}, x) == 1);
    CHECK(hamq::kraw_eval({5, 3, 1}, 0) == 10);
    CHECK_THROWS_AS(hamq::kraw_eval({4, 2, 2}, 5), std::invalid_argument);
    CHECK_THROWS_AS(hamq::kraw_eval({4, 2, 2}, -1), std::invalid_argument);
}

TEST_CASE("kraw_eval matches the q-ary character sum", "[krawtchouk][oracle]") {
    for (int q = 2; q <= 4; ++q) {
        const int max_n = (q == 2) ? 10 : (q == 3 ? 7 : 6);
        for (int n = 1; n <= max_n; ++n) {
            for (int l = 0; l <= n; ++l) {
                for (int x = 0; x <= n; ++x) {
                    INFO("n=" << n << " q=" << q << " l=" << l << " x=" << x);
                    REQUIRE(hamq::kraw_eval({n, q, l}, x) == oracle::kraw_by_enumeration(n, q, l, x));
                }
            }
        }
    }
}

TEST_CASE("kraw_eval endpoint rows for q = 2", "[krawtchouk][property]") {
    for (int n = 1; n <= 20; ++n) {
        for (int l = 0; l <= n; ++l) {
            CHECK(hamq::kraw_eval({n, 2, l}, 0) == hamq::binomial(n, l));
            CHECK(hamq::kraw_eval({n, 2, l}, n) == hamq::sign_power(l) * hamq::binomial(n, l));
        }
    }
}

TEST_CASE("orthogonality residuals vanish", "[krawtchouk][orthogonality]") {
    CHECK(hamq::check_orthogonality(4, 2, 1, 2) == 0);
    CHECK(hamq::check_orthogonality(6, 2, 3, 3) == 0);
    CHECK(hamq::check_orthogonality(5, 3, 2, 2) == 0);
    CHECK_THROWS_AS(hamq::check_orthogonality(4, 2, 5, 0), std::invalid_argument);

    // the left side for (5,3,2,2) is q^n (q-1)^i C(n,i) = 243 * 4 * 10
    ExactInt lhs = 0;
    for (int d = 0; d <= 5; ++d) {
        const auto k = oracle::kraw_by_enumeration(5, 3, 2, d);
        lhs += ExactInt(k) * k * hamq::ipow(2, d) * oracle::choose(5, d);
    }
    CHECK(lhs == 9720);
}

TEST_CASE("recurrence residuals", "[krawtchouk][recurrence]") {
    const auto a = hamq::check_recurrences(6, 2, 3, 2);
    REQUIRE(a.shifted);
    REQUIRE(a.unshifted);
    REQUIRE(a.partial_sum);
    CHECK(*a.shifted == 0);
    CHECK(*a.unshifted == 0);
    CHECK(*a.partial_sum == 0);

    const auto b = hamq::check_recurrences(4, 2, 1, 0);
    CHECK_FALSE(b.shifted.has_value());
    REQUIRE(b.unshifted);
    REQUIRE(b.partial_sum);
    CHECK(*b.unshifted == 0);
    CHECK(*b.partial_sum == 0);

    const auto c = hamq::check_recurrences(7, 4, 5, 3);
    CHECK(c.shifted.value() == 0);
    CHECK(c.unshifted.value() == 0);
    CHECK(c.partial_sum.value() == 0);

    // x = n: the n-1 polynomials are off the integer lattice
    const auto d = hamq::check_recurrences(5, 2, 2, 5);
    CHECK(d.shifted.value() == 0);
    CHECK_FALSE(d.unshifted.has_value());
    CHECK_FALSE(d.partial_sum.has_value());

    CHECK_THROWS_AS(hamq::check_recurrences(4, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("reciprocal law", "[krawtchouk][reciprocal]") {
    CHECK(hamq::check_reciprocal(8, 2, 2, 4) == 0);
    CHECK(hamq::check_reciprocal(3, 2, 0, 0) == 0);
    CHECK(hamq::check_reciprocal(9, 3, 4, 7) == 0);
    // both sides independently: 2^4 C(9,4) K_7(4) vs 2^7 C(9,7) K_4(7)
    const ExactInt left = ExactInt(16) * 126 * oracle::kraw_by_enumeration(9, 3, 7, 4);
    const ExactInt right = ExactInt(128) * 36 * oracle::kraw_by_enumeration(9, 3, 4, 7);
    CHECK(left == right);
}

TEST_CASE("generating function coefficients", "[krawtchouk][generating]") {
    CHECK(hamq::gen_function_coeffs(4, 2, 2) == std::vector<ExactInt>{1, 0, -2, 0, 1});
    CHECK(hamq::gen_function_coeffs(2, 2, 0) == std::vector<ExactInt>{1, 2, 1});
    const auto c = hamq::gen_function_coeffs(5, 3, 2);
    REQUIRE(c.size() == 6);
    for (int k = 0; k <= 5; ++k) CHECK(c[k] == oracle::kraw_by_enumeration(5, 3, k, 2));
}

TEST_CASE("inversion round trip", "[krawtchouk][inversion]") {
    const std::vector<ExactRational> ones(4, ExactRational(1));
    CHECK(hamq::inversion_roundtrip(3, 2, ones) == ones);

    std::vector<ExactRational> row;
    for (int x = 0; x <= 4; ++x) row.emplace_back(hamq::kraw_eval({4, 2, 2}, x));
    CHECK(hamq::inversion_roundtrip(4, 2, row) == row);
    // K_2 expands to the unit vector e_2
    const auto coeffs = hamq::kraw_transform(4, 2, row);
    for (int i = 0; i <= 4; ++i) CHECK(coeffs[i] == ExactRational(i == 2 ? 1 : 0));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-1000, 1000);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ExactRational> f;
        for (int i = 0; i <= 6; ++i) f.emplace_back(dist(rng));
        REQUIRE(hamq::inversion_roundtrip(6, 3, f) == f);
    }

    CHECK_THROWS_AS(hamq::inversion_roundtrip(3, 2, std::vector<ExactRational>(3)), std::invalid_argument);
}
