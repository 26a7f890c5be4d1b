#include "hamq/spectra.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using hamq::ExactInt;
using hamq::HammingGraphSpec;

namespace {

std::vector<ExactInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("HammingGraphSpec validation", "[spectra]") {
    CHECK_THROWS_AS(HammingGraphSpec(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(HammingGraphSpec(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(HammingGraphSpec(4, 5), std::invalid_argument);
    const HammingGraphSpec s{8, 4};
    CHECK(s.vertex_count() == 256);
    CHECK(s.degree() == 70);
}

TEST_CASE("closed-form spectra examples", "[spectra][closed_form]") {
    CHECK(hamq::spectrum_closed_form({4, 2}).eigenvalues() == ints({6, 0, -2, 0, 6}));
    CHECK(hamq::spectrum_closed_form({10, 5}).at(5) == 0);
    CHECK(hamq::spectrum_closed_form({3, 3}).eigenvalues() == ints({1, -1, 1, -1}));
    const auto ws = hamq::spectrum_closed_form({5, 2});
    for (int r = 0; r <= 5; ++r) CHECK(ws.entries[r].multiplicity == oracle::choose(5, r));
}

TEST_CASE("brute force character sums", "[spectra][bruteforce]") {
    const auto ws = hamq::spectrum_bruteforce({4, 2});
    CHECK(ws.at(2) == -2);
    for (int n = 1; n <= 9; ++n) {
        for (int l = 1; l <= n; ++l) CHECK(hamq::spectrum_bruteforce({n, l}).at(0) == hamq::binomial(n, l));
    }
    CHECK_THROWS_AS(hamq::spectrum_bruteforce({17, 3}), std::invalid_argument);

    // random weight-r characters agree with the representative
    hamq::BruteforceOptions opts;
    opts.samples_per_weight = 8;
    CHECK(hamq::spectrum_bruteforce({10, 4}, opts) == hamq::spectrum_closed_form({10, 4}));
    opts.parallel = true;
    CHECK(hamq::spectrum_bruteforce({11, 6}, opts) == hamq::spectrum_closed_form({11, 6}));
}

TEST_CASE("brute force matches a naive full-vertex sum", "[spectra][oracle]") {
    for (int n = 1; n <= 8; ++n) {
        for (int l = 1; l <= n; ++l) {
            const auto ws = hamq::spectrum_bruteforce({n, l});
            for (int r = 0; r <= n; ++r) {
                // a character of weight r placed at the high end
                const std::uint64_t a = ((std::uint64_t{1} << r) - 1) << (n - r);
                REQUIRE(ws.at(r) == oracle::binary_character_sum(n, l, a));
            }
        }
    }
}

TEST_CASE("Walsh-Hadamard spectrum agrees with closed form", "[spectra][fwht]") {
    for (int n = 1; n <= 12; ++n) {
        for (int l = 1; l <= n; ++l) {
            INFO("n=" << n << " l=" << l);
            REQUIRE(hamq::spectrum_walsh_hadamard({n, l}) == hamq::spectrum_closed_form({n, l}));
        }
    }
}

TEST_CASE("family closed forms", "[spectra][families]") {
    const auto h2 = hamq::hadamard_spectrum(2);
    CHECK(h2.at(2) == -10);
    CHECK(h2.at(4) == 6);
    CHECK(hamq::lambda_extremes(hamq::hadamard_spectrum(1)).min == -2);

    CHECK(hamq::family_4tminus1_spectrum(1).eigenvalues() == ints({3, -1, -1, 3}));
    CHECK(hamq::family_4tminus1_spectrum(2).eigenvalues() == ints({35, -5, -5, 3, 3, -5, -5, 35}));

    const auto f1 = hamq::family_4tplus2_spectrum(1);
    CHECK(f1.at(1) == -5);
    CHECK(f1.at(3) == 3);

    for (int t = 1; t <= 3; ++t) {
        CHECK(hamq::hadamard_spectrum(t) == hamq::spectrum_closed_form({4 * t, 2 * t}));
        CHECK(hamq::family_4tminus1_spectrum(t) == hamq::spectrum_closed_form({4 * t - 1, 2 * t}));
        CHECK(hamq::family_4tplus2_spectrum(t) == hamq::spectrum_closed_form({4 * t + 2, 2 * t + 2}));
    }
    CHECK_THROWS_AS(hamq::hadamard_spectrum(0), std::invalid_argument);
}

TEST_CASE("lambda_extremes examples", "[spectra][extremes]") {
    const auto a = hamq::lambda_extremes(hamq::hadamard_spectrum(2));
    CHECK(a.max == 70);
    CHECK(a.min == -10);
    CHECK(a.argmax == std::vector<std::int64_t>{0, 8});
    CHECK(a.argmin == std::vector<std::int64_t>{2, 6});

    const auto b = hamq::lambda_extremes(hamq::family_4tminus1_spectrum(1));
    CHECK(b.max == 3);
    CHECK(b.min == -1);
    CHECK(b.argmax == std::vector<std::int64_t>{0, 3});
    CHECK(b.argmin == std::vector<std::int64_t>{1, 2});

    const auto c = hamq::lambda_extremes(hamq::spectrum_closed_form({6, 3}));
    CHECK(c.max == 20);
    CHECK(c.min == -20);
    CHECK(c.argmax == std::vector<std::int64_t>{0});
    CHECK(c.argmin == std::vector<std::int64_t>{6});
}

TEST_CASE("spectrum invariants", "[spectra][property]") {
    for (int n = 1; n <= 16; ++n) {
        for (int l = 1; l <= n; ++l) {
            const auto ws = hamq::spectrum_closed_form({n, l});
            ExactInt trace = 0;
            for (const auto& e : ws.entries) trace += e.multiplicity * e.eigenvalue;
            CHECK(trace == 0);
            for (int r = 0; r <= n; ++r) CHECK(ws.at(n - r) == hamq::sign_power(l) * ws.at(r));
            if (n % 4 == 0 && 2 * l == n) {
                for (int r = 1; r <= n; r += 2) CHECK(ws.at(r) == 0);
            }
        }
    }
}

TEST_CASE("lambda_min relations for the three families", "[spectra][property]") {
    for (int t = 1; t <= 4; ++t) {
        const auto h = hamq::lambda_extremes(hamq::hadamard_spectrum(t));
        CHECK(h.min * (4 * t - 1) == -h.max);
        const auto m = hamq::lambda_extremes(hamq::family_4tminus1_spectrum(t));
        CHECK(m.min * (4 * t - 1) == -m.max);
        const auto p = hamq::lambda_extremes(hamq::family_4tplus2_spectrum(t));
        CHECK(p.min * (2 * t + 1) == -hamq::binomial(4 * t + 2, 2 * t + 2));
    }
}

TEST_CASE("negative-eigenvalue chain of the 4t-1 family", "[spectra][min_chain]") {
    for (int t = 1; t <= 6; ++t) {
        const auto rep = hamq::verify_min_chain(t);
        INFO("t=" << t);
        CHECK(rep.negatives_at_residues_1_2);
        CHECK(rep.pairs_equal);
        CHECK(rep.strictly_increasing_first_half);
        CHECK(rep.min_at_weight_one);
    }
}
