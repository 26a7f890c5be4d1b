#pragma once

/**
 * @file bounds.hpp
 * @brief Spectral chromatic bounds for H_{n,l} in exact rational arithmetic.
 *
 * classical_bound evaluates
 *
 *   chi >= 1 + max{ l1/|ln|, 2m/(2m - N dn), l1/(l1 - d1 + t1),
 *                   n+/n-, n-/n+, S+/S-, S-/S+ }
 *
 * over the full spectrum (N = 2^n vertices, multiplicities C(n, r)). Because
 * H_{n,l} is k-regular the Laplacian and signless Laplacian extremes are
 * t1 = k - ln, d1 = 2k, dn = k + ln. A term with a zero or negative
 * denominator is excluded from the max and flagged.
 *
 * quantum_lower_bound is 1 + l1/|ln|, and chi_q_verdict records the exact
 * values or intervals known for the families handled by this library.
 */

#include "hamq/exact.hpp"
#include "hamq/spectra.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamq {

struct BoundTerm {
    std::string name;  // lambda_ratio, edge_ratio, laplacian_ratio, inertia_plus, ...
    std::optional<ExactRational> value;  // nullopt: not applicable
    std::string note;

    bool applicable() const { return value.has_value(); }
    bool operator==(const BoundTerm&) const = default;
};

struct TaggedInt {
    ExactInt value;
    std::string provenance;

    bool operator==(const TaggedInt&) const = default;
};

struct BoundReport {
    HammingGraphSpec spec;
    ExactInt vertex_count;
    ExactInt degree;
    ExactInt edge_count;
    ExactInt lambda_1;
    ExactInt lambda_n;
    ExactInt theta_1;
    ExactInt delta_1;
    ExactInt delta_n;
    ExactInt n_plus;
    ExactInt n_minus;
    ExactInt s_plus;
    ExactInt s_minus;
    std::vector<BoundTerm> terms;
    ExactRational classical_lower;
    std::optional<ExactRational> quantum_lower;  // nullopt when lambda_n >= 0
    std::optional<TaggedInt> quantum_upper;
    std::optional<TaggedInt> exact_chi_q;

    const BoundTerm& term(const std::string& name) const {
        for (const auto& t : terms) {
            if (t.name == name) return t;
        }
        throw std::out_of_range("BoundReport: no term " + name);
    }

    bool operator==(const BoundReport&) const = default;
};

/// 1 + lambda_1 / |lambda_n|; rejects spectra with lambda_n >= 0.
inline ExactRational quantum_lower_bound(const WeightSpectrum& ws) {
    const auto ex = lambda_extremes(ws);
    if (ex.min >= 0) throw std::invalid_argument("quantum_lower_bound: lambda_n >= 0 (edgeless graph)");
    return ExactRational(1) + ExactRational(ex.max, -ex.min);
}

inline BoundReport classical_bound(const WeightSpectrum& ws) {
    if (ws.entries.empty()) throw std::invalid_argument("classical_bound: empty spectrum");
    const auto ex = lambda_extremes(ws);
    const auto& spec = ws.spec;

    BoundReport rep{spec};
    rep.vertex_count = spec.vertex_count();
    rep.degree = spec.degree();
    rep.edge_count = pow2(spec.n - 1) * rep.degree;
    rep.lambda_1 = ex.max;
    rep.lambda_n = ex.min;
    rep.theta_1 = rep.degree - ex.min;
    rep.delta_1 = rep.degree + ex.max;
    rep.delta_n = rep.degree + ex.min;
    for (const auto& e : ws.entries) {
        if (e.eigenvalue > 0) {
            rep.n_plus += e.multiplicity;
            rep.s_plus += e.multiplicity * e.eigenvalue * e.eigenvalue;
        } else if (e.eigenvalue < 0) {
            rep.n_minus += e.multiplicity;
            rep.s_minus += e.multiplicity * e.eigenvalue * e.eigenvalue;
        }
    }

    auto ratio = [](std::string name, const ExactInt& num, const ExactInt& den) {
        if (den <= 0) {
            return BoundTerm{std::move(name), std::nullopt,
                             "denominator " + den.str() + " is not positive; excluded"};
        }
        return BoundTerm{std::move(name), ExactRational(num, den), ""};
    };
    const ExactInt abs_min = (ex.min < 0) ? ExactInt(-ex.min) : ex.min;
    rep.terms.push_back(ratio("lambda_ratio", rep.lambda_1, abs_min));
    rep.terms.push_back(ratio("edge_ratio", 2 * rep.edge_count, 2 * rep.edge_count - rep.vertex_count * rep.delta_n));
    rep.terms.push_back(ratio("laplacian_ratio", rep.lambda_1, rep.lambda_1 - rep.delta_1 + rep.theta_1));
    rep.terms.push_back(ratio("inertia_plus", rep.n_plus, rep.n_minus));
    rep.terms.push_back(ratio("inertia_minus", rep.n_minus, rep.n_plus));
    rep.terms.push_back(ratio("energy_plus", rep.s_plus, rep.s_minus));
    rep.terms.push_back(ratio("energy_minus", rep.s_minus, rep.s_plus));

    std::optional<ExactRational> best;
    for (const auto& t : rep.terms) {
        if (t.value && (!best || *t.value > *best)) best = t.value;
    }
    rep.classical_lower = ExactRational(1) + best.value_or(ExactRational(0));
    if (ex.min < 0) rep.quantum_lower = quantum_lower_bound(ws);
    return rep;
}

enum class VerdictKind { exact, interval, lower_only };

inline std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::exact: return "exact";
        case VerdictKind::interval: return "interval";
        case VerdictKind::lower_only: return "lower_only";
    }
    return "?";
}

inline VerdictKind verdict_kind_from_string(const std::string& s) {
    if (s == "exact") return VerdictKind::exact;
    if (s == "interval") return VerdictKind::interval;
    if (s == "lower_only") return VerdictKind::lower_only;
    throw std::invalid_argument("unknown verdict kind '" + s + "'");
}

inline constexpr const char* kOpenUpperBoundQuestion =
    "Open question: Find a upper bound on chi_q(H_{n,l}) when 2l<n";

struct ChiQVerdict {
    HammingGraphSpec spec;
    VerdictKind kind;
    /// Lower end; for kind == exact it equals the exact value.
    ExactRational lower;
    /// Upper end; set for exact and interval verdicts.
    std::optional<ExactInt> upper;
    std::string provenance;

    /// Smallest integer compatible with the lower end.
    ExactInt lower_int() const { return hamq::ceil(lower); }
    std::optional<ExactInt> exact() const {
        if (kind == VerdictKind::exact) return upper;
        return std::nullopt;
    }

    bool operator==(const ChiQVerdict&) const = default;
};

inline ChiQVerdict chi_q_verdict(const HammingGraphSpec& spec) {
    const std::int64_t n = spec.n;
    const std::int64_t l = spec.l;
    auto exact = [&](std::int64_t v, std::string why) {
        return ChiQVerdict{spec, VerdictKind::exact, ExactRational(v), ExactInt(v), std::move(why)};
    };
    if (l % 2 != 0) return exact(2, "bipartite: l odd, so chi_q = 2");
    if (l == n) return exact(2, "bipartite: l = n gives a perfect matching, so chi_q = 2");
    if (n % 4 == 0 && 2 * l == n) {
        return exact(n, "theorem-1.1: Hadamard graph H_{4t,2t}, chi_q = n");
    }
    if (n % 4 == 3 && 2 * l == n + 1) {
        return exact(n + 1, "theorem-3.2: H_{4t-1,2t}, chi_q = n + 1");
    }
    const ExactRational qlb = quantum_lower_bound(spectrum_closed_form(spec));
    if (2 * l >= n) {
        std::string why = "lemma-2.4 lower bound; theorem-3.5 upper bound 2l (l even, l >= n/2)";
        if (n % 4 == 2 && l == (n - 2) / 2 + 2) why = "proposition-3.6: " + why;
        return ChiQVerdict{spec, VerdictKind::interval, qlb, ExactInt(2 * l), std::move(why)};
    }
    return ChiQVerdict{spec, VerdictKind::lower_only, qlb, std::nullopt,
                       std::string("lemma-2.4 lower bound only; ") + kOpenUpperBoundQuestion};
}

/// classical_bound annotated with the verdict's known upper bound / exact value.
inline BoundReport bound_report(const HammingGraphSpec& spec) {
    auto rep = classical_bound(spectrum_closed_form(spec));
    const auto v = chi_q_verdict(spec);
    if (v.upper) rep.quantum_upper = TaggedInt{*v.upper, v.provenance};
    if (const auto x = v.exact()) rep.exact_chi_q = TaggedInt{*x, v.provenance};
    return rep;
}

}  // namespace hamq
