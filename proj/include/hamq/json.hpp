#pragma once

/**
 * @file json.hpp
 * @brief nlohmann::json conversions for every report type.
 *
 * Exact integers are encoded as decimal strings and rationals as "p/q" so
 * no value passes through a double. Keys are lower snake case.
 */

#include "hamq/bounds.hpp"
#include "hamq/colouring.hpp"
#include "hamq/exact.hpp"
#include "hamq/products.hpp"
#include "hamq/spectra.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace hamq {

using json = nlohmann::json;

namespace detail {

inline json int_json(const ExactInt& v) { return v.str(); }
inline ExactInt int_from(const json& j) { return parse_int(j.get<std::string>()); }
inline json rat_json(const ExactRational& v) { return to_string(v); }
inline ExactRational rat_from(const json& j) { return parse_rational(j.get<std::string>()); }

inline json opt_int_json(const std::optional<ExactInt>& v) { return v ? int_json(*v) : json(nullptr); }
inline std::optional<ExactInt> opt_int_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return int_from(j);
}

}  // namespace detail

inline void to_json(json& j, const HammingGraphSpec& s) { j = json{{"n", s.n}, {"l", s.l}}; }
inline HammingGraphSpec spec_from_json(const json& j) {
    return HammingGraphSpec{j.at("n").get<std::int64_t>(), j.at("l").get<std::int64_t>()};
}

inline void to_json(json& j, const WeightSpectrum& ws) {
    j = json{{"spec", ws.spec}, {"entries", json::array()}};
    for (const auto& e : ws.entries) {
        j["entries"].push_back(
            {{"r", e.r}, {"eigenvalue", detail::int_json(e.eigenvalue)}, {"multiplicity", detail::int_json(e.multiplicity)}});
    }
}
inline WeightSpectrum weight_spectrum_from_json(const json& j) {
    WeightSpectrum ws{spec_from_json(j.at("spec")), {}};
    for (const auto& e : j.at("entries")) {
        ws.entries.push_back({e.at("r").get<std::int64_t>(), detail::int_from(e.at("eigenvalue")),
                              detail::int_from(e.at("multiplicity"))});
    }
    return ws;
}

inline void to_json(json& j, const TaggedInt& t) {
    j = json{{"value", detail::int_json(t.value)}, {"provenance", t.provenance}};
}

inline void to_json(json& j, const BoundReport& r) {
    j = json{{"spec", r.spec},
             {"vertex_count", detail::int_json(r.vertex_count)},
             {"degree", detail::int_json(r.degree)},
             {"edge_count", detail::int_json(r.edge_count)},
             {"lambda_1", detail::int_json(r.lambda_1)},
             {"lambda_n", detail::int_json(r.lambda_n)},
             {"theta_1", detail::int_json(r.theta_1)},
             {"delta_1", detail::int_json(r.delta_1)},
             {"delta_n", detail::int_json(r.delta_n)},
             {"n_plus", detail::int_json(r.n_plus)},
             {"n_minus", detail::int_json(r.n_minus)},
             {"s_plus", detail::int_json(r.s_plus)},
             {"s_minus", detail::int_json(r.s_minus)},
             {"terms", json::array()},
             {"classical_lower", detail::rat_json(r.classical_lower)},
             {"classical_lower_provenance", "theorem-2.3"},
             {"quantum_lower", r.quantum_lower ? detail::rat_json(*r.quantum_lower) : json(nullptr)},
             {"quantum_lower_provenance", "lemma-2.4"},
             {"quantum_upper", r.quantum_upper ? json(*r.quantum_upper) : json(nullptr)},
             {"exact_chi_q", r.exact_chi_q ? json(*r.exact_chi_q) : json(nullptr)}};
    for (const auto& t : r.terms) {
        j["terms"].push_back({{"name", t.name},
                              {"value", t.value ? detail::rat_json(*t.value) : json(nullptr)},
                              {"applicable", t.applicable()},
                              {"note", t.note}});
    }
}

inline BoundReport bound_report_from_json(const json& j) {
    auto tagged = [](const json& v) -> std::optional<TaggedInt> {
        if (v.is_null()) return std::nullopt;
        return TaggedInt{detail::int_from(v.at("value")), v.at("provenance").get<std::string>()};
    };
    BoundReport r{spec_from_json(j.at("spec"))};
    r.vertex_count = detail::int_from(j.at("vertex_count"));
    r.degree = detail::int_from(j.at("degree"));
    r.edge_count = detail::int_from(j.at("edge_count"));
    r.lambda_1 = detail::int_from(j.at("lambda_1"));
    r.lambda_n = detail::int_from(j.at("lambda_n"));
    r.theta_1 = detail::int_from(j.at("theta_1"));
    r.delta_1 = detail::int_from(j.at("delta_1"));
    r.delta_n = detail::int_from(j.at("delta_n"));
    r.n_plus = detail::int_from(j.at("n_plus"));
    r.n_minus = detail::int_from(j.at("n_minus"));
    r.s_plus = detail::int_from(j.at("s_plus"));
    r.s_minus = detail::int_from(j.at("s_minus"));
    for (const auto& t : j.at("terms")) {
        std::optional<ExactRational> v;
        if (!t.at("value").is_null()) v = detail::rat_from(t.at("value"));
        r.terms.push_back({t.at("name").get<std::string>(), v, t.at("note").get<std::string>()});
    }
    r.classical_lower = detail::rat_from(j.at("classical_lower"));
    if (!j.at("quantum_lower").is_null()) r.quantum_lower = detail::rat_from(j.at("quantum_lower"));
    r.quantum_upper = tagged(j.at("quantum_upper"));
    r.exact_chi_q = tagged(j.at("exact_chi_q"));
    return r;
}

inline void to_json(json& j, const ChiQVerdict& v) {
    j = json{{"spec", v.spec},
             {"kind", to_string(v.kind)},
             {"lower", detail::rat_json(v.lower)},
             {"lower_int", detail::int_json(v.lower_int())},
             {"upper", detail::opt_int_json(v.upper)},
             {"provenance", v.provenance}};
}
inline ChiQVerdict chi_q_verdict_from_json(const json& j) {
    return ChiQVerdict{spec_from_json(j.at("spec")), verdict_kind_from_string(j.at("kind").get<std::string>()),
                       detail::rat_from(j.at("lower")), detail::opt_int_from(j.at("upper")),
                       j.at("provenance").get<std::string>()};
}

inline void to_json(json& j, const ColouringParams& p) {
    j = json{{"family", to_string(p.family)}, {"n", p.n}, {"l", p.l}, {"d", p.d}};
}
inline ColouringParams colouring_params_from_json(const json& j) {
    return ColouringParams::make(colouring_family_from_string(j.at("family").get<std::string>()),
                                 j.at("n").get<std::int64_t>(), j.at("l").get<std::int64_t>());
}

inline void to_json(json& j, const CertificationReport& r) {
    j = json{{"params", r.params},
             {"check", r.check},
             {"strategy", r.strategy},
             {"tolerance", r.tolerance},
             {"residuals",
              {{"hermitian", r.hermitian},
               {"idempotent", r.idempotent},
               {"mutual_orthogonality", r.mutual_orthogonality},
               {"completeness", r.completeness},
               {"edge_orthogonality", r.edge_orthogonality}}},
             {"edge_scalar_max", r.edge_scalar_max},
             {"vertices_checked", r.vertices_checked},
             {"pairs_checked", r.pairs_checked},
             {"passed", r.passed}};
}
inline CertificationReport certification_report_from_json(const json& j) {
    CertificationReport r{colouring_params_from_json(j.at("params"))};
    r.check = j.at("check").get<std::string>();
    r.strategy = j.at("strategy").get<std::string>();
    r.tolerance = j.at("tolerance").get<double>();
    const auto& res = j.at("residuals");
    r.hermitian = res.at("hermitian").get<double>();
    r.idempotent = res.at("idempotent").get<double>();
    r.mutual_orthogonality = res.at("mutual_orthogonality").get<double>();
    r.completeness = res.at("completeness").get<double>();
    r.edge_orthogonality = res.at("edge_orthogonality").get<double>();
    r.edge_scalar_max = j.at("edge_scalar_max").get<std::int64_t>();
    r.vertices_checked = j.at("vertices_checked").get<std::uint64_t>();
    r.pairs_checked = j.at("pairs_checked").get<std::uint64_t>();
    r.passed = j.at("passed").get<bool>();
    return r;
}

inline void to_json(json& j, const ProductGraph& g) {
    j = json{{"left", g.left},
             {"right", g.right},
             {"lambda_max", detail::int_json(g.lambda_max)},
             {"lambda_min", detail::int_json(g.lambda_min)},
             {"spectrum", json::array()}};
    for (const auto& e : g.spectrum) {
        j["spectrum"].push_back(
            {{"eigenvalue", detail::int_json(e.eigenvalue)}, {"multiplicity", detail::int_json(e.multiplicity)}});
    }
}
inline ProductGraph product_graph_from_json(const json& j) {
    ProductGraph g{spec_from_json(j.at("left")), spec_from_json(j.at("right")), {},
                   detail::int_from(j.at("lambda_max")), detail::int_from(j.at("lambda_min"))};
    for (const auto& e : j.at("spectrum")) {
        g.spectrum.push_back({detail::int_from(e.at("eigenvalue")), detail::int_from(e.at("multiplicity"))});
    }
    return g;
}

inline void to_json(json& j, const ProductVerdict& v) {
    j = json{{"left", v.left},
             {"right", v.right},
             {"left_ratio", detail::rat_json(v.left_ratio)},
             {"right_ratio", detail::rat_json(v.right_ratio)},
             {"kind", to_string(v.kind)},
             {"lower", detail::rat_json(v.lower)},
             {"upper", detail::opt_int_json(v.upper)},
             {"tags", v.tags},
             {"provenance", v.provenance}};
}
inline ProductVerdict product_verdict_from_json(const json& j) {
    return ProductVerdict{spec_from_json(j.at("left")),
                          spec_from_json(j.at("right")),
                          detail::rat_from(j.at("left_ratio")),
                          detail::rat_from(j.at("right_ratio")),
                          verdict_kind_from_string(j.at("kind").get<std::string>()),
                          detail::rat_from(j.at("lower")),
                          detail::opt_int_from(j.at("upper")),
                          j.at("tags").get<std::vector<std::string>>(),
                          j.at("provenance").get<std::string>()};
}

}  // namespace hamq
