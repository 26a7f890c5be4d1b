#pragma once

/**
 * @file krawtchouk.hpp
 * @brief Exact Krawtchouk polynomials K_l^{n,q}(x) and residual checkers for
 *        their classical identities.
 *
 *   K_l^{n,q}(x) = sum_{j=0..l} (-1)^j (q-1)^{l-j} C(x, j) C(n-x, l-j)
 *
 * The checkers return residuals (left side minus right side) instead of
 * booleans; every residual is zero when the identity holds.
 */

#include "hamq/exact.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamq {

struct KrawtchoukParams {
    std::int64_t n;
    std::int64_t q;
    std::int64_t l;

    KrawtchoukParams(std::int64_t n_, std::int64_t q_, std::int64_t l_) : n(n_), q(q_), l(l_) {
        if (n < 1) throw std::invalid_argument("KrawtchoukParams: n must be >= 1");
        if (q < 2) throw std::invalid_argument("KrawtchoukParams: q must be >= 2");
        if (l < 0 || l > n) {
            throw std::invalid_argument("KrawtchoukParams: l=" + std::to_string(l) + " outside [0, n]");
        }
    }

    bool operator==(const KrawtchoukParams&) const = default;
};

namespace detail {

// Raw sum without the l <= n restriction; the recurrences need K_n^{n-1},
// which the sum correctly evaluates to zero. Requires 0 <= x <= n.
inline ExactInt kraw_sum(std::int64_t n, std::int64_t q, std::int64_t l, std::int64_t x) {
    ExactInt total = 0;
    const ExactInt qm1 = q - 1;
    for (std::int64_t j = 0; j <= l; ++j) {
        const ExactInt cx = binomial(x, j);
        if (cx == 0) break;  // C(x, j) = 0 for all larger j too
        const ExactInt cr = binomial(n - x, l - j);
        if (cr == 0) continue;
        ExactInt term = ipow(qm1, l - j) * cx * cr;
        if (j % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

inline void require_range(std::int64_t v, std::int64_t lo, std::int64_t hi, const char* name) {
    if (v < lo || v > hi) {
        throw std::invalid_argument(std::string(name) + "=" + std::to_string(v) + " outside [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

inline void require_base(std::int64_t n, std::int64_t q) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (q < 2) throw std::invalid_argument("q must be >= 2");
}

}  // namespace detail

/// K_l^{n,q}(x) for integer 0 <= x <= n.
inline ExactInt kraw_eval(const KrawtchoukParams& p, std::int64_t x) {
    detail::require_range(x, 0, p.n, "x");
    return detail::kraw_sum(p.n, p.q, p.l, x);
}

/// Orthogonality: sum_d K_i(d) K_j(d) (q-1)^d C(n,d) - q^n (q-1)^i C(n,i) [i == j].
inline ExactInt check_orthogonality(std::int64_t n, std::int64_t q, std::int64_t i, std::int64_t j) {
    detail::require_base(n, q);
    detail::require_range(i, 0, n, "i");
    detail::require_range(j, 0, n, "j");
    const ExactInt qm1 = q - 1;
    ExactInt lhs = 0;
    for (std::int64_t d = 0; d <= n; ++d) {
        lhs += detail::kraw_sum(n, q, i, d) * detail::kraw_sum(n, q, j, d) * ipow(qm1, d) * binomial(n, d);
    }
    const ExactInt rhs = (i == j) ? ipow(ExactInt{q}, n) * ipow(qm1, i) * binomial(n, i) : ExactInt{0};
    return lhs - rhs;
}

/// Residuals of the three recurrences; std::nullopt marks "not applicable".
struct RecurrenceResiduals {
    /// K_k^n(x) - [K_k^{n-1}(x-1) - K_{k-1}^{n-1}(x-1)], needs x >= 1.
    std::optional<ExactInt> shifted;
    /// K_k^n(x) - [K_k^{n-1}(x) + (q-1) K_{k-1}^{n-1}(x)], needs x <= n-1.
    std::optional<ExactInt> unshifted;
    /// K_k^{n-1}(x) - sum_{j=0..k} K_j^n(x) (1-q)^{k-j}, needs x <= n-1.
    std::optional<ExactInt> partial_sum;

    bool all_zero() const {
        auto ok = [](const std::optional<ExactInt>& r) { return !r || *r == 0; };
        return ok(shifted) && ok(unshifted) && ok(partial_sum);
    }
};

inline RecurrenceResiduals check_recurrences(std::int64_t n, std::int64_t q, std::int64_t k, std::int64_t x) {
    detail::require_base(n, q);
    if (k == 0) throw std::invalid_argument("check_recurrences: k must be >= 1");
    detail::require_range(k, 1, n, "k");
    detail::require_range(x, 0, n, "x");
    using detail::kraw_sum;

    RecurrenceResiduals res;
    const ExactInt lhs = kraw_sum(n, q, k, x);
    // n = 1 leaves K^{0}, defined only at x = 0
    if (x >= 1) {
        res.shifted = lhs - (kraw_sum(n - 1, q, k, x - 1) - kraw_sum(n - 1, q, k - 1, x - 1));
    }
    if (x <= n - 1) {
        res.unshifted = lhs - (kraw_sum(n - 1, q, k, x) + ExactInt{q - 1} * kraw_sum(n - 1, q, k - 1, x));
        ExactInt sum = 0;
        const ExactInt one_minus_q = 1 - q;
        for (std::int64_t j = 0; j <= k; ++j) sum += kraw_sum(n, q, j, x) * ipow(one_minus_q, k - j);
        res.partial_sum = kraw_sum(n - 1, q, k, x) - sum;
    }
    return res;
}

/// Reciprocal law: (q-1)^i C(n,i) K_d(i) - (q-1)^d C(n,d) K_i(d).
inline ExactInt check_reciprocal(std::int64_t n, std::int64_t q, std::int64_t i, std::int64_t d) {
    detail::require_base(n, q);
    detail::require_range(i, 0, n, "i");
    detail::require_range(d, 0, n, "d");
    const ExactInt qm1 = q - 1;
    return ipow(qm1, i) * binomial(n, i) * detail::kraw_sum(n, q, d, i) -
           ipow(qm1, d) * binomial(n, d) * detail::kraw_sum(n, q, i, d);
}

/// Coefficients of (1 - z)^d (1 + (q-1) z)^(n-d), lowest degree first, length n+1.
/// Computed by polynomial multiplication, independently of kraw_eval.
inline std::vector<ExactInt> gen_function_coeffs(std::int64_t n, std::int64_t q, std::int64_t d) {
    detail::require_base(n, q);
    detail::require_range(d, 0, n, "d");
    std::vector<ExactInt> poly{1};
    auto multiply_linear = [&poly](const ExactInt& c0, const ExactInt& c1) {
        std::vector<ExactInt> next(poly.size() + 1, ExactInt{0});
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i] * c0;
            next[i + 1] += poly[i] * c1;
        }
        poly = std::move(next);
    };
    for (std::int64_t i = 0; i < d; ++i) multiply_linear(1, -1);
    for (std::int64_t i = 0; i < n - d; ++i) multiply_linear(1, q - 1);
    return poly;
}

/// Expansion coefficients f_i = q^{-n} sum_j f(j) K_j(i).
inline std::vector<ExactRational> kraw_transform(std::int64_t n, std::int64_t q, std::span<const ExactRational> f) {
    detail::require_base(n, q);
    if (f.size() != static_cast<std::size_t>(n + 1)) {
        throw std::invalid_argument("kraw_transform: expected " + std::to_string(n + 1) + " values, got " +
                                    std::to_string(f.size()));
    }
    const ExactRational scale(ExactInt{1}, ipow(ExactInt{q}, n));
    std::vector<ExactRational> coeffs(f.size());
    for (std::int64_t i = 0; i <= n; ++i) {
        ExactRational acc = 0;
        for (std::int64_t j = 0; j <= n; ++j) acc += f[j] * ExactRational(detail::kraw_sum(n, q, j, i));
        coeffs[i] = acc * scale;
    }
    return coeffs;
}

/// f(x) = sum_j coeffs_j K_j(x) at x = 0..n.
inline std::vector<ExactRational> kraw_expand(std::int64_t n, std::int64_t q, std::span<const ExactRational> coeffs) {
    detail::require_base(n, q);
    if (coeffs.size() != static_cast<std::size_t>(n + 1)) {
        throw std::invalid_argument("kraw_expand: expected " + std::to_string(n + 1) + " coefficients, got " +
                                    std::to_string(coeffs.size()));
    }
    std::vector<ExactRational> values(coeffs.size());
    for (std::int64_t x = 0; x <= n; ++x) {
        ExactRational acc = 0;
        for (std::int64_t j = 0; j <= n; ++j) acc += coeffs[j] * ExactRational(detail::kraw_sum(n, q, j, x));
        values[x] = acc;
    }
    return values;
}

/// Transform then re-expand; the identity map when the inversion formula holds.
inline std::vector<ExactRational> inversion_roundtrip(std::int64_t n, std::int64_t q, std::span<const ExactRational> f) {
    const auto coeffs = kraw_transform(n, q, f);
    return kraw_expand(n, q, coeffs);
}

}  // namespace hamq
