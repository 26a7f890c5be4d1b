#pragma once

/**
 * @file spectra.hpp
 * @brief Weight-indexed spectra of the binary Hamming graphs H_{n,l}.
 *
 * H_{n,l} is the Cayley graph on F_2^n with connection set
 * S = { s : wt(s) = l }. Its eigenvalue at the character indexed by a
 * depends only on r = wt(a), so a spectrum is stored as n+1 weight classes
 * (r, lambda(r), C(n, r)).
 *
 * Three independent routes are provided:
 *   - spectrum_closed_form: Krawtchouk evaluation lambda(r) = K_l^n(r);
 *   - spectrum_bruteforce: the character sum over S for one representative
 *     per weight, plus an optional full Walsh-Hadamard transform;
 *   - family closed forms for (4t, 2t), (4t-1, 2t) and (4t+2, 2t+2).
 */

#include "hamq/exact.hpp"
#include "hamq/krawtchouk.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hamq {

struct HammingGraphSpec {
    std::int64_t n;
    std::int64_t l;

    HammingGraphSpec(std::int64_t n_, std::int64_t l_) : n(n_), l(l_) {
        if (n < 1) throw std::invalid_argument("HammingGraphSpec: n must be >= 1");
        if (l < 1 || l > n) {
            throw std::invalid_argument("HammingGraphSpec: l=" + std::to_string(l) + " outside [1, " +
                                        std::to_string(n) + "]");
        }
    }

    ExactInt vertex_count() const { return pow2(n); }
    ExactInt degree() const { return binomial(n, l); }

    bool operator==(const HammingGraphSpec&) const = default;
};

struct WeightClass {
    std::int64_t r;
    ExactInt eigenvalue;
    ExactInt multiplicity;

    bool operator==(const WeightClass&) const = default;
};

struct WeightSpectrum {
    HammingGraphSpec spec;
    std::vector<WeightClass> entries;  // indexed by r = 0..n

    const ExactInt& at(std::int64_t r) const { return entries.at(static_cast<std::size_t>(r)).eigenvalue; }

    std::vector<ExactInt> eigenvalues() const {
        std::vector<ExactInt> out;
        out.reserve(entries.size());
        for (const auto& e : entries) out.push_back(e.eigenvalue);
        return out;
    }

    bool operator==(const WeightSpectrum&) const = default;
};

namespace detail {

inline WeightSpectrum make_spectrum(const HammingGraphSpec& spec, std::vector<ExactInt> values) {
    WeightSpectrum ws{spec, {}};
    ws.entries.reserve(values.size());
    for (std::int64_t r = 0; r <= spec.n; ++r) {
        ws.entries.push_back({r, std::move(values[static_cast<std::size_t>(r)]), binomial(spec.n, r)});
    }
    return ws;
}

}  // namespace detail

/// lambda(r) = K_l^{n,2}(r).
inline WeightSpectrum spectrum_closed_form(const HammingGraphSpec& spec) {
    const KrawtchoukParams p{spec.n, 2, spec.l};
    std::vector<ExactInt> values;
    for (std::int64_t r = 0; r <= spec.n; ++r) values.push_back(kraw_eval(p, r));
    return detail::make_spectrum(spec, std::move(values));
}

struct BruteforceOptions {
    std::int64_t max_n = 16;
    /// Random vectors per weight class checked against the representative (0 = skip).
    std::size_t samples_per_weight = 0;
    std::uint64_t seed = 20240601;
    /// Split the weight loop across hardware threads.
    bool parallel = false;
};

namespace detail {

using Word = std::uint64_t;

inline Word low_bits(std::int64_t count) { return count >= 64 ? ~Word{0} : ((Word{1} << count) - 1); }

// Next word with the same popcount (Gosper's hack).
inline Word next_same_weight(Word v) {
    const Word t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

inline std::vector<Word> connection_set(std::int64_t n, std::int64_t l) {
    std::vector<Word> out;
    if (l == 0) return {0};
    const Word limit = Word{1} << n;
    for (Word s = low_bits(l); s < limit; s = next_same_weight(s)) out.push_back(s);
    return out;
}

inline std::int64_t character_sum(const std::vector<Word>& conn, Word a) {
    std::int64_t sum = 0;
    for (const Word s : conn) sum += (std::popcount(s & a) % 2 == 0) ? 1 : -1;
    return sum;
}

inline Word random_word_of_weight(std::int64_t n, std::int64_t r, std::mt19937_64& rng) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    Word a = 0;
    for (std::int64_t i = 0; i < r; ++i) a |= Word{1} << idx[i];
    return a;
}

}  // namespace detail

/**
 * Character-sum oracle: lambda(r) = sum_{s in S} (-1)^{s . a} for the
 * representative a = 1^r 0^{n-r}. With samples_per_weight > 0 each weight
 * class is also checked at random vectors of that weight; a disagreement
 * throws std::logic_error.
 */
inline WeightSpectrum spectrum_bruteforce(const HammingGraphSpec& spec, const BruteforceOptions& opts = {}) {
    if (spec.n > opts.max_n) {
        throw std::invalid_argument("spectrum_bruteforce: n=" + std::to_string(spec.n) + " exceeds cap " +
                                    std::to_string(opts.max_n));
    }
    if (spec.n > 62) throw std::invalid_argument("spectrum_bruteforce: n > 62 unsupported");
    const auto conn = detail::connection_set(spec.n, spec.l);

    auto eval_weight = [&](std::int64_t r) {
        const std::int64_t value = detail::character_sum(conn, detail::low_bits(r));
        if (opts.samples_per_weight > 0) {
            std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(r));
            for (std::size_t i = 0; i < opts.samples_per_weight; ++i) {
                const auto a = detail::random_word_of_weight(spec.n, r, rng);
                if (detail::character_sum(conn, a) != value) {
                    throw std::logic_error("spectrum_bruteforce: eigenvalue not constant on weight class r=" +
                                           std::to_string(r));
                }
            }
        }
        return value;
    };

    std::vector<std::int64_t> raw(static_cast<std::size_t>(spec.n + 1));
    if (opts.parallel) {
        const auto workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
        std::vector<std::future<void>> jobs;
        for (std::size_t w = 0; w < workers; ++w) {
            jobs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t r = w; r < raw.size(); r += workers) raw[r] = eval_weight(static_cast<std::int64_t>(r));
            }));
        }
        for (auto& j : jobs) j.get();
    } else {
        for (std::size_t r = 0; r < raw.size(); ++r) raw[r] = eval_weight(static_cast<std::int64_t>(r));
    }

    std::vector<ExactInt> values(raw.begin(), raw.end());
    return detail::make_spectrum(spec, std::move(values));
}

/**
 * Full fast Walsh-Hadamard transform of the indicator of S over all 2^n
 * characters. Verifies that every character of weight r has the same
 * eigenvalue and returns the weight-indexed spectrum.
 */
inline WeightSpectrum spectrum_walsh_hadamard(const HammingGraphSpec& spec, std::int64_t max_n = 16) {
    if (spec.n > max_n) {
        throw std::invalid_argument("spectrum_walsh_hadamard: n=" + std::to_string(spec.n) + " exceeds cap " +
                                    std::to_string(max_n));
    }
    const std::size_t size = std::size_t{1} << spec.n;
    std::vector<std::int64_t> f(size, 0);
    for (const auto s : detail::connection_set(spec.n, spec.l)) f[s] = 1;
    for (std::size_t h = 1; h < size; h <<= 1) {
        for (std::size_t i = 0; i < size; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const auto u = f[j];
                const auto v = f[j + h];
                f[j] = u + v;
                f[j + h] = u - v;
            }
        }
    }
    std::vector<std::optional<std::int64_t>> by_weight(static_cast<std::size_t>(spec.n + 1));
    for (std::size_t a = 0; a < size; ++a) {
        auto& slot = by_weight[static_cast<std::size_t>(std::popcount(a))];
        if (!slot) {
            slot = f[a];
        } else if (*slot != f[a]) {
            throw std::logic_error("spectrum_walsh_hadamard: eigenvalue not constant on a weight class");
        }
    }
    std::vector<ExactInt> values;
    for (const auto& v : by_weight) values.emplace_back(*v);
    return detail::make_spectrum(spec, std::move(values));
}

/// H_{4t, 2t}: zero at odd weights, (-1)^j C(n, n/2) C(n/2, j) / C(n, 2j) at r = 2j.
inline WeightSpectrum hadamard_spectrum(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("hadamard_spectrum: t must be >= 1");
    const std::int64_t n = 4 * t;
    const HammingGraphSpec spec{n, 2 * t};
    const ExactInt top = binomial(n, n / 2);
    std::vector<ExactInt> values;
    for (std::int64_t r = 0; r <= n; ++r) {
        if (r % 2 != 0) {
            values.emplace_back(0);
            continue;
        }
        const std::int64_t j = r / 2;
        values.push_back(sign_power(j) * exact_div(top * binomial(n / 2, j), binomial(n, r), "hadamard_spectrum"));
    }
    return detail::make_spectrum(spec, std::move(values));
}

/// H_{4t-1, 2t}.
inline WeightSpectrum family_4tminus1_spectrum(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("family_4tminus1_spectrum: t must be >= 1");
    const std::int64_t n = 4 * t - 1;
    const HammingGraphSpec spec{n, 2 * t};
    const ExactInt top = binomial(n, 2 * t);
    std::vector<ExactInt> values;
    for (std::int64_t r = 0; r <= n; ++r) {
        const std::int64_t j = r / 2;
        const ExactInt num = top * binomial(2 * t - 1, j);
        const ExactInt mag = exact_div(num, binomial(n, r), "family_4tminus1_spectrum");
        values.push_back((r % 2 == 0) ? sign_power(j) * mag : sign_power(j + 1) * mag);
    }
    return detail::make_spectrum(spec, std::move(values));
}

/// H_{4t+2, 2t+2}.
inline WeightSpectrum family_4tplus2_spectrum(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("family_4tplus2_spectrum: t must be >= 1");
    const std::int64_t n = 4 * t + 2;
    const std::int64_t l = 2 * t + 2;
    const HammingGraphSpec spec{n, l};
    const ExactInt top = binomial(n, l);
    std::vector<ExactInt> values;
    for (std::int64_t r = 0; r <= n; ++r) {
        const std::int64_t j = r / 2;
        if (r % 2 == 0) {
            const ExactInt num = (binomial(2 * t, j) - binomial(2 * t, j - 1)) * top;
            values.push_back(sign_power(j) * exact_div(num, binomial(n, r), "family_4tplus2_spectrum"));
        } else {
            const ExactInt num = 2 * binomial(2 * t, j) * top;
            values.push_back(sign_power(j + 1) * exact_div(num, binomial(n, r), "family_4tplus2_spectrum"));
        }
    }
    return detail::make_spectrum(spec, std::move(values));
}

struct Extremes {
    ExactInt max;
    ExactInt min;
    std::vector<std::int64_t> argmax;  // weights attaining max
    std::vector<std::int64_t> argmin;

    bool operator==(const Extremes&) const = default;
};

inline Extremes lambda_extremes(const WeightSpectrum& ws) {
    if (ws.entries.empty()) throw std::invalid_argument("lambda_extremes: empty spectrum");
    Extremes ex{ws.entries.front().eigenvalue, ws.entries.front().eigenvalue, {}, {}};
    for (const auto& e : ws.entries) {
        if (e.eigenvalue > ex.max) ex.max = e.eigenvalue;
        if (e.eigenvalue < ex.min) ex.min = e.eigenvalue;
    }
    for (const auto& e : ws.entries) {
        if (e.eigenvalue == ex.max) ex.argmax.push_back(e.r);
        if (e.eigenvalue == ex.min) ex.argmin.push_back(e.r);
    }
    return ex;
}

/**
 * Exhaustive check of the negative-eigenvalue structure of H_{4t-1, 2t}:
 * negatives sit exactly at r = 1, 2 (mod 4), rho(4j+1) = rho(4j+2), the
 * values rho(4j+1) strictly increase over the first half r <= (n-1)/2, and
 * lambda_min = rho(1).
 */
struct MinChainReport {
    std::int64_t t;
    bool negatives_at_residues_1_2 = false;
    bool pairs_equal = false;
    bool strictly_increasing_first_half = false;
    bool min_at_weight_one = false;

    bool holds() const {
        return negatives_at_residues_1_2 && pairs_equal && strictly_increasing_first_half && min_at_weight_one;
    }
};

inline MinChainReport verify_min_chain(std::int64_t t) {
    const auto ws = spectrum_closed_form(HammingGraphSpec{4 * t - 1, 2 * t});
    const std::int64_t n = ws.spec.n;
    MinChainReport rep{t};

    rep.negatives_at_residues_1_2 = true;
    for (std::int64_t r = 0; r <= n; ++r) {
        const bool expect_negative = (r % 4 == 1 || r % 4 == 2);
        if ((ws.at(r) < 0) != expect_negative) rep.negatives_at_residues_1_2 = false;
    }

    rep.pairs_equal = true;
    for (std::int64_t r = 1; r + 1 <= n; r += 4) {
        if (ws.at(r) != ws.at(r + 1)) rep.pairs_equal = false;
    }

    rep.strictly_increasing_first_half = true;
    for (std::int64_t r = 5; 2 * r <= n - 1; r += 4) {
        if (!(ws.at(r - 4) < ws.at(r))) rep.strictly_increasing_first_half = false;
    }

    rep.min_at_weight_one = (lambda_extremes(ws).min == ws.at(1));
    return rep;
}

}  // namespace hamq
