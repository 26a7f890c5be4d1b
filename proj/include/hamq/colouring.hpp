#pragma once

/**
 * @file colouring.hpp
 * @brief Explicit rank-one projector colourings of H_{n,l} and their
 *        numerical certification.
 *
 * For a vertex x (padded with zeros to length d) and colour alpha in 0..d-1
 *
 *   P_x^alpha(i, j) = (1/d) exp(2 pi i (j - i) alpha / d) (-1)^{x_i + x_j}.
 *
 * Three constructions share this formula and differ only in (n, l, d):
 *   hadamard     n = 4t,   l = 2t, d = n
 *   four_t_minus_1 n = 4t-1, l = 2t, d = n + 1
 *   half_plus    l even, l >= n/2, d = 2l
 * In every case an edge x ~ y satisfies sum_k (-1)^{x_k + y_k} = d - 2l = 0
 * after padding, which forces P_x^alpha P_y^alpha = 0.
 */

#include "hamq/exact.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hamq {

using ComplexMatrix = Eigen::MatrixXcd;

enum class ColouringFamily { hadamard, four_t_minus_1, half_plus };

inline std::string to_string(ColouringFamily f) {
    switch (f) {
        case ColouringFamily::hadamard: return "hadamard";
        case ColouringFamily::four_t_minus_1: return "4t-1";
        case ColouringFamily::half_plus: return "half-plus";
    }
    return "?";
}

inline ColouringFamily colouring_family_from_string(const std::string& s) {
    if (s == "hadamard") return ColouringFamily::hadamard;
    if (s == "4t-1" || s == "family-4t-minus-1") return ColouringFamily::four_t_minus_1;
    if (s == "half-plus") return ColouringFamily::half_plus;
    throw std::invalid_argument("unknown colouring family '" + s + "'");
}

/// Validated (family, n, l, d) of one construction.
struct ColouringParams {
    ColouringFamily family;
    std::int64_t n;
    std::int64_t l;
    std::int64_t d;

    /// Throws std::invalid_argument when (n, l) does not fit the family.
    static ColouringParams make(ColouringFamily family, std::int64_t n, std::optional<std::int64_t> l = {}) {
        if (n < 1 || n > 62) throw std::invalid_argument("colouring: n must be in [1, 62]");
        switch (family) {
            case ColouringFamily::hadamard: {
                if (n % 4 != 0) throw std::invalid_argument("hadamard family needs n divisible by 4");
                const std::int64_t ll = l.value_or(n / 2);
                if (ll != n / 2) throw std::invalid_argument("hadamard family needs l = n/2");
                return {family, n, ll, n};
            }
            case ColouringFamily::four_t_minus_1: {
                if (n % 4 != 3) throw std::invalid_argument("4t-1 family needs n = 3 (mod 4)");
                const std::int64_t ll = l.value_or((n + 1) / 2);
                if (ll != (n + 1) / 2) throw std::invalid_argument("4t-1 family needs l = (n+1)/2");
                return {family, n, ll, n + 1};
            }
            case ColouringFamily::half_plus: {
                if (!l) throw std::invalid_argument("half-plus family needs l");
                const std::int64_t ll = *l;
                if (ll < 1 || ll > n) throw std::invalid_argument("half-plus family needs 1 <= l <= n");
                if (ll % 2 != 0) throw std::invalid_argument("half-plus family needs l even");
                if (2 * ll < n) throw std::invalid_argument("half-plus family needs l >= n/2");
                return {family, n, ll, 2 * ll};
            }
        }
        throw std::invalid_argument("unknown colouring family");
    }

    bool operator==(const ColouringParams&) const = default;
};

/// One vertex of a construction; x holds the n graph coordinates (unpadded).
struct ProjectorSystem {
    ColouringParams params;
    std::vector<std::uint8_t> x;

    ProjectorSystem(ColouringParams p, std::vector<std::uint8_t> bits) : params(p), x(std::move(bits)) {
        if (x.size() != static_cast<std::size_t>(params.n)) {
            throw std::invalid_argument("ProjectorSystem: x has length " + std::to_string(x.size()) +
                                        ", expected " + std::to_string(params.n));
        }
        for (auto b : x) {
            if (b > 1) throw std::invalid_argument("ProjectorSystem: x must be a bit vector");
        }
    }

    static ProjectorSystem from_word(ColouringParams p, std::uint64_t word) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(p.n));
        for (std::int64_t i = 0; i < p.n; ++i) bits[i] = static_cast<std::uint8_t>((word >> i) & 1U);
        return {p, std::move(bits)};
    }

    /// x extended with zeros to length d.
    std::vector<std::uint8_t> padded() const {
        auto out = x;
        out.resize(static_cast<std::size_t>(params.d), 0);
        return out;
    }
};

inline ComplexMatrix build_projector(const ProjectorSystem& sys, std::int64_t alpha) {
    const std::int64_t d = sys.params.d;
    if (alpha < 0 || alpha >= d) {
        throw std::invalid_argument("build_projector: alpha=" + std::to_string(alpha) + " outside [0, " +
                                    std::to_string(d - 1) + "]");
    }
    const auto xp = sys.padded();
    ComplexMatrix p(d, d);
    const double inv_d = 1.0 / static_cast<double>(d);
    for (std::int64_t i = 0; i < d; ++i) {
        for (std::int64_t j = 0; j < d; ++j) {
            // reduce the exponent mod d before converting to an angle
            const std::int64_t e = (((j - i) * alpha) % d + d) % d;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d);
            const double sign = ((xp[i] + xp[j]) % 2 == 0) ? 1.0 : -1.0;
            p(i, j) = std::polar(inv_d * sign, angle);
        }
    }
    return p;
}

inline double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

enum class PairStrategy { translation, random, exhaustive };

inline std::string to_string(PairStrategy s) {
    switch (s) {
        case PairStrategy::translation: return "translation";
        case PairStrategy::random: return "random";
        case PairStrategy::exhaustive: return "exhaustive";
    }
    return "?";
}

inline PairStrategy pair_strategy_from_string(const std::string& s) {
    if (s == "translation") return PairStrategy::translation;
    if (s == "random") return PairStrategy::random;
    if (s == "exhaustive") return PairStrategy::exhaustive;
    throw std::invalid_argument("unknown pair strategy '" + s + "'");
}

inline constexpr std::int64_t kExhaustiveVertexCap = 4096;

/// Maximum residuals of one certification run; pass iff each one is <= tol.
struct CertificationReport {
    ColouringParams params;
    std::string check;  // "complete_system" or "edge_orthogonality"
    std::string strategy;
    double tolerance = 0.0;
    double hermitian = 0.0;
    double idempotent = 0.0;
    double mutual_orthogonality = 0.0;
    double completeness = 0.0;
    double edge_orthogonality = 0.0;
    /// Largest |sum_k (-1)^{x_k + y_k}| over checked edges; must be exactly 0.
    std::int64_t edge_scalar_max = 0;
    std::uint64_t vertices_checked = 0;
    std::uint64_t pairs_checked = 0;
    bool passed = false;

    void finalize() {
        passed = hermitian <= tolerance && idempotent <= tolerance && mutual_orthogonality <= tolerance &&
                 completeness <= tolerance && edge_orthogonality <= tolerance && edge_scalar_max == 0;
    }

    bool operator==(const CertificationReport&) const = default;
};

inline double default_tolerance(const ColouringParams& p) { return 1e-9 * static_cast<double>(p.d); }

/// Hermitian, idempotent, mutually orthogonal and summing to I, for one vertex.
inline CertificationReport certify_complete_system(const ProjectorSystem& sys, double tol) {
    const auto d = sys.params.d;
    CertificationReport rep{sys.params, "complete_system", "single-vertex", tol};
    std::vector<ComplexMatrix> ps;
    ps.reserve(static_cast<std::size_t>(d));
    for (std::int64_t a = 0; a < d; ++a) ps.push_back(build_projector(sys, a));

    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (std::int64_t a = 0; a < d; ++a) {
        const auto& p = ps[a];
        rep.hermitian = std::max(rep.hermitian, max_abs(p - p.adjoint()));
        rep.idempotent = std::max(rep.idempotent, max_abs(p * p - p));
        for (std::int64_t b = 0; b < d; ++b) {
            if (b != a) rep.mutual_orthogonality = std::max(rep.mutual_orthogonality, max_abs(p * ps[b]));
        }
        sum += p;
    }
    rep.completeness = max_abs(sum - ComplexMatrix::Identity(d, d));
    rep.vertices_checked = 1;
    rep.finalize();
    return rep;
}

/// Combine two runs of the same check, keeping maximum residuals.
inline void merge_into(CertificationReport& into, const CertificationReport& other) {
    into.hermitian = std::max(into.hermitian, other.hermitian);
    into.idempotent = std::max(into.idempotent, other.idempotent);
    into.mutual_orthogonality = std::max(into.mutual_orthogonality, other.mutual_orthogonality);
    into.completeness = std::max(into.completeness, other.completeness);
    into.edge_orthogonality = std::max(into.edge_orthogonality, other.edge_orthogonality);
    into.edge_scalar_max = std::max(into.edge_scalar_max, other.edge_scalar_max);
    into.vertices_checked += other.vertices_checked;
    into.pairs_checked += other.pairs_checked;
    into.finalize();
}

struct EdgeCheckOptions {
    PairStrategy strategy = PairStrategy::translation;
    std::uint64_t random_pairs = 256;
    std::uint64_t seed = 20240601;
    bool parallel = true;
};

namespace detail {

inline std::uint64_t random_weight_word(std::int64_t n, std::int64_t w, std::mt19937_64& rng) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::uint64_t s = 0;
    for (std::int64_t i = 0; i < w; ++i) s |= std::uint64_t{1} << idx[i];
    return s;
}

inline std::vector<std::uint64_t> weight_words(std::int64_t n, std::int64_t w) {
    std::vector<std::uint64_t> out;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < limit; ++s) {
        if (std::popcount(s) == w) out.push_back(s);
    }
    return out;
}

inline std::vector<ComplexMatrix> all_projectors(const ProjectorSystem& sys) {
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(sys.params.d));
    for (std::int64_t a = 0; a < sys.params.d; ++a) out.push_back(build_projector(sys, a));
    return out;
}

// Residuals for one edge (x, y), all colours; px holds the projectors of x.
inline void check_edge(const ColouringParams& p, std::uint64_t x, const std::vector<ComplexMatrix>& px,
                       std::uint64_t y, CertificationReport& rep) {
    const auto sy = ProjectorSystem::from_word(p, y);
    const auto xp = ProjectorSystem::from_word(p, x).padded();
    const auto yp = sy.padded();
    std::int64_t scalar = 0;
    for (std::int64_t k = 0; k < p.d; ++k) scalar += ((xp[k] + yp[k]) % 2 == 0) ? 1 : -1;
    rep.edge_scalar_max = std::max<std::int64_t>(rep.edge_scalar_max, scalar < 0 ? -scalar : scalar);
    for (std::int64_t a = 0; a < p.d; ++a) {
        const ComplexMatrix prod = px[a] * build_projector(sy, a);
        rep.edge_orthogonality = std::max(rep.edge_orthogonality, max_abs(prod));
    }
    rep.pairs_checked += 1;
}

}  // namespace detail

/**
 * Checks ||P_x^alpha P_y^alpha||_max <= tol for every colour and for edges
 * (x, y), d(x, y) = l, chosen by the strategy:
 *   translation  x = 0 against every y of weight l (one edge per translation orbit);
 *   random       random_pairs uniformly random edges from a seeded generator;
 *   exhaustive   every edge, only for 2^n <= 4096.
 * Each edge also has its exact scalar sum_k (-1)^{x_k + y_k} checked to be 0.
 */
inline CertificationReport certify_edge_orthogonality(ColouringFamily family, std::int64_t n, std::int64_t l,
                                                      double tol, const EdgeCheckOptions& opts = {}) {
    const auto p = ColouringParams::make(family, n, l);
    CertificationReport rep{p, "edge_orthogonality", to_string(opts.strategy), tol};
    const auto conn = detail::weight_words(n, l);

    switch (opts.strategy) {
        case PairStrategy::translation: {
            const auto px = detail::all_projectors(ProjectorSystem::from_word(p, 0));
            for (const auto s : conn) detail::check_edge(p, 0, px, s, rep);
            rep.vertices_checked = 1;
            break;
        }
        case PairStrategy::random: {
            std::mt19937_64 rng(opts.seed);
            std::uniform_int_distribution<std::uint64_t> vertex(0, (std::uint64_t{1} << n) - 1);
            for (std::uint64_t i = 0; i < opts.random_pairs; ++i) {
                const auto x = vertex(rng);
                const auto s = detail::random_weight_word(n, l, rng);
                detail::check_edge(p, x, detail::all_projectors(ProjectorSystem::from_word(p, x)), x ^ s, rep);
            }
            rep.vertices_checked = opts.random_pairs;
            break;
        }
        case PairStrategy::exhaustive: {
            if (n > 12 || (std::int64_t{1} << n) > kExhaustiveVertexCap) {
                throw std::invalid_argument("exhaustive edge check refused: 2^" + std::to_string(n) + " > " +
                                            std::to_string(kExhaustiveVertexCap) + " vertices");
            }
            const std::uint64_t nv = std::uint64_t{1} << n;
            // unordered edges x < y suffice: P_y P_x is the adjoint of P_x P_y
            auto run_range = [&](std::uint64_t begin, std::uint64_t stride) {
                CertificationReport part{p, rep.check, rep.strategy, tol};
                for (std::uint64_t x = begin; x < nv; x += stride) {
                    const auto px = detail::all_projectors(ProjectorSystem::from_word(p, x));
                    for (const auto s : conn) {
                        const auto y = x ^ s;
                        if (y > x) detail::check_edge(p, x, px, y, part);
                    }
                }
                return part;
            };
            const std::uint64_t workers =
                opts.parallel ? std::max<std::uint64_t>(1, std::thread::hardware_concurrency()) : 1;
            std::vector<std::future<CertificationReport>> jobs;
            for (std::uint64_t w = 0; w < workers; ++w) {
                jobs.push_back(std::async(std::launch::async, run_range, w, workers));
            }
            for (auto& j : jobs) {
                const auto part = j.get();
                rep.edge_orthogonality = std::max(rep.edge_orthogonality, part.edge_orthogonality);
                rep.edge_scalar_max = std::max(rep.edge_scalar_max, part.edge_scalar_max);
                rep.pairs_checked += part.pairs_checked;
            }
            rep.vertices_checked = nv;
            break;
        }
    }
    rep.finalize();
    return rep;
}

/// Evidence that a construction passed both checks in this process.
/// Only certify_colouring can produce a passed certificate.
class ColouringCertificate {
public:
    const ColouringParams& params() const { return params_; }
    const CertificationReport& complete_system() const { return complete_; }
    const CertificationReport& edges() const { return edges_; }
    bool passed() const { return complete_.passed && edges_.passed; }

private:
    ColouringCertificate(ColouringParams p, CertificationReport c, CertificationReport e)
        : params_(p), complete_(std::move(c)), edges_(std::move(e)) {}

    ColouringParams params_;
    CertificationReport complete_;
    CertificationReport edges_;

    friend ColouringCertificate certify_colouring(ColouringFamily, std::int64_t, std::optional<std::int64_t>,
                                                  std::optional<double>, const EdgeCheckOptions&, std::uint64_t);
};

/**
 * Runs certify_complete_system (on x = 0 plus vertex_samples random vertices,
 * or on every vertex for the exhaustive strategy) and
 * certify_edge_orthogonality. tol defaults to 1e-9 * d.
 */
inline ColouringCertificate certify_colouring(ColouringFamily family, std::int64_t n, std::optional<std::int64_t> l,
                                              std::optional<double> tol, const EdgeCheckOptions& opts = {},
                                              std::uint64_t vertex_samples = 16) {
    const auto p = ColouringParams::make(family, n, l);
    const double eps = tol.value_or(default_tolerance(p));

    auto complete = certify_complete_system(ProjectorSystem::from_word(p, 0), eps);
    complete.strategy = to_string(opts.strategy);
    if (opts.strategy == PairStrategy::exhaustive && n <= 12) {
        for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
            merge_into(complete, certify_complete_system(ProjectorSystem::from_word(p, x), eps));
        }
    } else {
        std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::uint64_t> vertex(0, (std::uint64_t{1} << n) - 1);
        for (std::uint64_t i = 0; i < vertex_samples; ++i) {
            merge_into(complete, certify_complete_system(ProjectorSystem::from_word(p, vertex(rng)), eps));
        }
    }
    auto edges = certify_edge_orthogonality(family, n, p.l, eps, opts);
    return ColouringCertificate(p, std::move(complete), std::move(edges));
}

/// Number of colours d, as an upper bound on chi_q; refuses uncertified input.
inline ExactInt chi_q_upper_from_colouring(const ColouringCertificate& cert) {
    if (!cert.passed()) {
        throw std::logic_error("chi_q_upper_from_colouring: certification of " + to_string(cert.params().family) +
                               " n=" + std::to_string(cert.params().n) + " did not pass");
    }
    return ExactInt(cert.params().d);
}

}  // namespace hamq
