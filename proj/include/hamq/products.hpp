#pragma once

/**
 * @file products.hpp
 * @brief Categorical (tensor) products H_{n1,l1} x H_{n2,l2}: spectra and
 *        quantum chromatic numbers.
 */

#include "hamq/bounds.hpp"
#include "hamq/exact.hpp"
#include "hamq/spectra.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hamq {

struct EigenvalueMultiplicity {
    ExactInt eigenvalue;
    ExactInt multiplicity;

    bool operator==(const EigenvalueMultiplicity&) const = default;
};

struct ProductGraph {
    HammingGraphSpec left;
    HammingGraphSpec right;
    /// Distinct products lambda_i mu_j in increasing order, multiplicities aggregated.
    std::vector<EigenvalueMultiplicity> spectrum;
    ExactInt lambda_max;  // lambda_1 mu_1
    ExactInt lambda_min;  // min{lambda_1 mu_m, lambda_n mu_1}

    ExactInt total_multiplicity() const {
        ExactInt total = 0;
        for (const auto& e : spectrum) total += e.multiplicity;
        return total;
    }

    bool operator==(const ProductGraph&) const = default;
};

inline ProductGraph product_spectrum(const WeightSpectrum& a, const WeightSpectrum& b) {
    if (a.entries.empty() || b.entries.empty()) throw std::invalid_argument("product_spectrum: empty spectrum");
    std::map<ExactInt, ExactInt> agg;
    for (const auto& x : a.entries) {
        for (const auto& y : b.entries) agg[x.eigenvalue * y.eigenvalue] += x.multiplicity * y.multiplicity;
    }
    ProductGraph pg{a.spec, b.spec, {}, 0, 0};
    for (auto& [value, mult] : agg) pg.spectrum.push_back({value, mult});

    const auto ea = lambda_extremes(a);
    const auto eb = lambda_extremes(b);
    pg.lambda_max = ea.max * eb.max;
    pg.lambda_min = std::min(ea.max * eb.min, ea.min * eb.max);
    return pg;
}

/// Membership of a factor in the two families with exactly known chi_q.
struct FamilyIndex {
    enum class Kind { hadamard, four_t_minus_1 } kind;
    std::int64_t t;
};

inline std::optional<FamilyIndex> classify_family(const HammingGraphSpec& s) {
    if (s.n % 4 == 0 && 2 * s.l == s.n) return FamilyIndex{FamilyIndex::Kind::hadamard, s.n / 4};
    if (s.n % 4 == 3 && 2 * s.l == s.n + 1) return FamilyIndex{FamilyIndex::Kind::four_t_minus_1, (s.n + 1) / 4};
    return std::nullopt;
}

struct ProductVerdict {
    HammingGraphSpec left;
    HammingGraphSpec right;
    ExactRational left_ratio;   // lambda_1 / |lambda_n|
    ExactRational right_ratio;  // mu_1 / |mu_m|
    VerdictKind kind;
    ExactRational lower;
    std::optional<ExactInt> upper;
    /// Machine-readable justification, e.g. {"corollary-3.10", "theorem-3.11-case-2"}.
    std::vector<std::string> tags;
    std::string provenance;

    std::optional<ExactInt> exact() const {
        if (kind == VerdictKind::exact) return upper;
        return std::nullopt;
    }

    bool operator==(const ProductVerdict&) const = default;
};

/**
 * chi_q(a x b). When each factor's chi_q is known and equals
 * 1 + lambda_1/|lambda_n|, the value is min{chi_q(a), chi_q(b)}; otherwise
 * an interval from the product upper bound min{chi_q(a), chi_q(b)} and the
 * spectral lower bound 1 + min(ratio(a), ratio(b)).
 *
 * Factors are ordered internally by spectral ratio (ties keep caller order),
 * so the reported tags do not depend on argument order beyond ties.
 */
inline ProductVerdict product_chi_q(const HammingGraphSpec& a, const HammingGraphSpec& b) {
    const auto sa = spectrum_closed_form(a);
    const auto sb = spectrum_closed_form(b);
    const ExactRational qa = quantum_lower_bound(sa);
    const ExactRational qb = quantum_lower_bound(sb);

    // first = smaller ratio (the "t" side), second = larger ("s" side)
    const bool swap = qb < qa;
    const HammingGraphSpec& first = swap ? b : a;
    const HammingGraphSpec& second = swap ? a : b;
    const ExactRational q_first = swap ? qb : qa;
    const ExactRational q_second = swap ? qa : qb;

    ProductVerdict v{a, b, qa - 1, qb - 1, VerdictKind::interval, q_first, std::nullopt, {}, ""};

    const auto vf = chi_q_verdict(first);
    const auto vs = chi_q_verdict(second);
    const auto xf = vf.exact();
    const auto xs = vs.exact();
    const bool first_tight = xf && ExactRational(*xf) == q_first;
    const bool second_tight = xs && ExactRational(*xs) == q_second;

    if (first_tight && second_tight) {
        const ExactInt value = std::min(*xf, *xs);
        v.kind = VerdictKind::exact;
        v.lower = ExactRational(value);
        v.upper = value;
        v.tags.push_back("corollary-3.10");
        v.provenance = "both factors attain chi_q = 1 + lambda_1/|lambda_n|; chi_q(product) = min{" + xf->str() +
                       ", " + xs->str() + "}";
        const auto ff = classify_family(first);
        const auto fs = classify_family(second);
        if (ff && fs && fs->t >= ff->t) {
            using K = FamilyIndex::Kind;
            int c = 0;
            if (ff->kind == K::hadamard && fs->kind == K::hadamard) c = 1;
            if (ff->kind == K::four_t_minus_1 && fs->kind == K::hadamard) c = 2;
            if (ff->kind == K::hadamard && fs->kind == K::four_t_minus_1) c = 3;
            if (ff->kind == K::four_t_minus_1 && fs->kind == K::four_t_minus_1) c = 4;
            v.tags.push_back("theorem-3.11-case-" + std::to_string(c));
            v.provenance += "; t=" + std::to_string(ff->t) + ", s=" + std::to_string(fs->t) + ", value 4t";
        }
        return v;
    }

    v.tags.push_back("theorem-3.9");
    v.provenance = "lower bound 1 + min spectral ratio";
    const auto uf = vf.upper;
    const auto us = vs.upper;
    if (uf || us) {
        v.upper = (uf && us) ? std::min(*uf, *us) : (uf ? *uf : *us);
        v.tags.push_back("lemma-3.8");
        v.provenance += "; upper bound min of known factor upper bounds";
    } else {
        v.kind = VerdictKind::lower_only;
    }
    return v;
}

}  // namespace hamq
