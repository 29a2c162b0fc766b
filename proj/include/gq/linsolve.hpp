#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gq/exact_number.hpp"

namespace gq {

/// Dense rational matrix, row-major rows.
using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

namespace detail {

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        const Rational piv = m[row][col];
        for (auto& v : m[row])
            v /= piv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

inline std::size_t matrix_rank(RatMatrix m)
{
    if (m.empty())
        return 0;
    const std::size_t n = m.front().size();
    return detail::rref(m, n).size();
}

/*
 * Particular solution of A t = b (free variables set to zero), or nullopt
 * when the system is inconsistent.
 */
inline std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b)
{
    const std::size_t n = a.empty() ? 0 : a.front().size();
    RatMatrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r)
        aug[r].push_back(b[r]);
    const auto pivots = detail::rref(aug, n);
    for (std::size_t r = pivots.size(); r < aug.size(); ++r)
        if (!aug[r][n].is_zero())
            return std::nullopt;
    RatVector t(n, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        t[pivots[r]] = aug[r][n];
    return t;
}

} // namespace gq
