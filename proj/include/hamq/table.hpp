#pragma once

/**
 * @file table.hpp
 * @brief The (n+1) x (n+1) eigenvalue table rho_l^n(r) = K_l^n(r), rows
 *        indexed by weight r and columns by distance l (l = 0 included).
 */

#include "hamq/exact.hpp"
#include "hamq/krawtchouk.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace hamq {

/// rows[r][l] = K_l^{n,2}(r).
inline std::vector<std::vector<ExactInt>> eigenvalue_table(std::int64_t n) {
    std::vector<std::vector<ExactInt>> rows;
    for (std::int64_t r = 0; r <= n; ++r) {
        std::vector<ExactInt> row;
        for (std::int64_t l = 0; l <= n; ++l) row.push_back(kraw_eval(KrawtchoukParams{n, 2, l}, r));
        rows.push_back(std::move(row));
    }
    return rows;
}

/**
 * Fixed-width text layout: every cell right-aligned to the widest cell,
 * cells separated by one space, LF line endings.
 *
 *    n=3 l=0   1   2   3
 *    r=0   1   3   3   1
 *      1   1   1  -1  -1
 */
inline std::string format_table(std::int64_t n, const std::vector<std::vector<ExactInt>>& rows) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"n=" + std::to_string(n)};
    for (std::int64_t l = 0; l <= n; ++l) header.push_back(l == 0 ? "l=0" : std::to_string(l));
    cells.push_back(std::move(header));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::string> line{r == 0 ? "r=0" : std::to_string(r)};
        for (const auto& v : rows[r]) line.push_back(v.str());
        cells.push_back(std::move(line));
    }
    std::size_t width = 0;
    for (const auto& line : cells) {
        for (const auto& c : line) width = std::max(width, c.size());
    }
    std::string out;
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i > 0) out += ' ';
            out.append(width - line[i].size(), ' ');
            out += line[i];
        }
        out += '\n';
    }
    return out;
}

inline std::string format_table(std::int64_t n) { return format_table(n, eigenvalue_table(n)); }

}  // namespace hamq
