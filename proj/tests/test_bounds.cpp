#include "hamq/bounds.hpp"

#include <catch2/catch_amalgamated.hpp>

using hamq::ExactInt;
using hamq::ExactRational;
using hamq::VerdictKind;

TEST_CASE("quantum lower bound examples", "[bounds]") {
    CHECK(hamq::quantum_lower_bound(hamq::hadamard_spectrum(2)) == 8);
    CHECK(hamq::quantum_lower_bound(hamq::family_4tminus1_spectrum(2)) == 8);
    CHECK(hamq::quantum_lower_bound(hamq::family_4tplus2_spectrum(1)) == 4);
    // l = n = 1 is a matching; n = 2, l = 2 too
    CHECK(hamq::quantum_lower_bound(hamq::spectrum_closed_form({1, 1})) == 2);
}

TEST_CASE("quantum lower bound on the families", "[bounds][property]") {
    for (int t = 1; t <= 4; ++t) {
        CHECK(hamq::quantum_lower_bound(hamq::hadamard_spectrum(t)) == 4 * t);
        CHECK(hamq::quantum_lower_bound(hamq::family_4tminus1_spectrum(t)) == 4 * t);
    }
    for (int t = 1; t <= 3; ++t) CHECK(hamq::quantum_lower_bound(hamq::family_4tplus2_spectrum(t)) == 2 * t + 2);
}

TEST_CASE("classical bound on H_{8,4}", "[bounds][classical]") {
    const auto rep = hamq::classical_bound(hamq::hadamard_spectrum(2));
    CHECK(rep.vertex_count == 256);
    CHECK(rep.degree == 70);
    CHECK(rep.edge_count == 8960);
    CHECK(rep.lambda_1 == 70);
    CHECK(rep.lambda_n == -10);
    CHECK(rep.theta_1 == 80);
    CHECK(rep.delta_1 == 140);
    CHECK(rep.delta_n == 60);
    // weights 0,8 (70, mult 2), 2,6 (-10, 56), 4 (6, 70)
    CHECK(rep.n_plus == 72);
    CHECK(rep.n_minus == 56);
    CHECK(rep.s_plus == 2 * 4900 + 70 * 36);
    CHECK(rep.s_minus == 56 * 100);
    CHECK(rep.term("lambda_ratio").value == ExactRational(7));
    CHECK(rep.term("edge_ratio").value == ExactRational(7));
    CHECK(rep.term("laplacian_ratio").value == ExactRational(7));
    CHECK(rep.term("inertia_plus").value == ExactRational(72, 56));
    CHECK(rep.term("energy_plus").value == ExactRational(12320, 5600));
    CHECK(rep.classical_lower == 8);
    CHECK(rep.quantum_lower == ExactRational(8));
    CHECK_THROWS_AS(rep.term("nope"), std::out_of_range);
}

TEST_CASE("classical bound flags inapplicable terms", "[bounds][classical]") {
    // H_{4,4}: eigenvalues +-1, each with multiplicity 8
    const auto rep = hamq::classical_bound(hamq::spectrum_closed_form({4, 4}));
    CHECK(rep.term("lambda_ratio").value == ExactRational(1));
    const auto& edge = rep.term("edge_ratio");
    // 2m - N dn = 16 - 16 * 0 = 16 here; laplacian denominator 1 - 2 + 2 = 1
    CHECK(edge.applicable());
    CHECK(rep.classical_lower == 2);

    // H_{2,1} is a 4-cycle; still all terms finite
    CHECK(hamq::classical_bound(hamq::spectrum_closed_form({2, 1})).classical_lower == 2);
}

TEST_CASE("bound invariants", "[bounds][property]") {
    for (int n = 1; n <= 14; ++n) {
        for (int l = 1; l <= n; ++l) {
            const hamq::HammingGraphSpec spec{n, l};
            const auto ws = hamq::spectrum_closed_form(spec);
            const auto rep = hamq::classical_bound(ws);
            INFO("n=" << n << " l=" << l);
            CHECK(rep.s_plus + rep.s_minus == hamq::pow2(n) * hamq::binomial(n, l));
            REQUIRE(rep.quantum_lower);
            CHECK(*rep.quantum_lower == ExactRational(1) + *rep.term("lambda_ratio").value);
            CHECK(*rep.quantum_lower == hamq::quantum_lower_bound(ws));
            CHECK(rep.classical_lower >= *rep.quantum_lower);
            // regular graph: the three eigenvalue ratios coincide
            CHECK(rep.term("edge_ratio").value == rep.term("lambda_ratio").value);
            CHECK(rep.term("laplacian_ratio").value == rep.term("lambda_ratio").value);

            const auto v = hamq::chi_q_verdict(spec);
            CHECK(!v.provenance.empty());
            if (v.upper) CHECK(v.lower <= ExactRational(*v.upper));
            CHECK(v.lower >= *rep.quantum_lower);
        }
    }
}

TEST_CASE("chi_q verdicts", "[bounds][verdict]") {
    auto v = hamq::chi_q_verdict({8, 4});
    CHECK(v.kind == VerdictKind::exact);
    CHECK(v.exact() == ExactInt(8));

    v = hamq::chi_q_verdict({7, 4});
    CHECK(v.exact() == ExactInt(8));

    v = hamq::chi_q_verdict({6, 4});
    CHECK(v.kind == VerdictKind::interval);
    CHECK(v.lower == 4);
    CHECK(v.upper == ExactInt(8));
    CHECK(v.provenance.find("lemma-2.4") != std::string::npos);

    v = hamq::chi_q_verdict({9, 3});
    CHECK(v.exact() == ExactInt(2));

    v = hamq::chi_q_verdict({6, 6});
    CHECK(v.exact() == ExactInt(2));

    v = hamq::chi_q_verdict({10, 2});
    CHECK(v.kind == VerdictKind::lower_only);
    CHECK_FALSE(v.upper.has_value());
    CHECK(v.provenance.find(hamq::kOpenUpperBoundQuestion) != std::string::npos);
    // H_{10,2}: lambda_1 = 45, lambda_min = K_2(5) = -5
    CHECK(v.lower == 10);
    CHECK(v.lower_int() == 10);

    v = hamq::chi_q_verdict({10, 6});
    CHECK(v.kind == VerdictKind::interval);
    CHECK(v.lower == 6);
    CHECK(v.upper == ExactInt(12));
}

TEST_CASE("bound_report carries verdict data", "[bounds]") {
    const auto r = hamq::bound_report({11, 6});
    REQUIRE(r.exact_chi_q);
    CHECK(r.exact_chi_q->value == 12);
    REQUIRE(r.quantum_upper);
    CHECK(r.quantum_upper->value == 12);

    const auto s = hamq::bound_report({10, 6});
    CHECK_FALSE(s.exact_chi_q.has_value());
    REQUIRE(s.quantum_upper);
    CHECK(s.quantum_upper->value == 12);
}

TEST_CASE("verdict kind strings", "[bounds]") {
    for (auto k : {VerdictKind::exact, VerdictKind::interval, VerdictKind::lower_only}) {
        CHECK(hamq::verdict_kind_from_string(hamq::to_string(k)) == k);
    }
    CHECK_THROWS_AS(hamq::verdict_kind_from_string("maybe"), std::invalid_argument);
}
