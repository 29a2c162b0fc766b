#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gq/errors.hpp"
#include "gq/green.hpp"
#include "gq/linsolve.hpp"
#include "gq/mat2.hpp"
#include "gq/random.hpp"

namespace gq {

inline bool is_idempotent(const Mat2& x) { return x * x == x; }
inline bool is_nilpotent(const Mat2& x) { return (x * x).is_zero(); }

inline bool is_rank1_idempotent(const Mat2& x) { return rank(x) == 1 && is_idempotent(x); }

/// a x a = a and x a x = x.
inline bool is_inverse_pair(const Mat2& a, const Mat2& x) { return a * x * a == a && x * a * x == x; }

/// Membership in SP(a;1) = {x : tr(a x) = 1, det x = 0} for rank-1 a.
inline bool inverse_membership(const Mat2& a, const Mat2& x)
{
    require_rank_one(a, "inverse_membership");
    return trace(a * x) == Rational(1) && det(x).is_zero();
}

/// a^T / <a, a>, an inverse of any rank-1 a.
inline Mat2 pinv_rank1(const Mat2& a)
{
    require_rank_one(a, "pinv_rank1");
    return norm_sq(a).inv() * transpose(a);
}

/*
 * Bilinear parametrization (s, t) -> (d0 + s d1)(q0 + t q1)^T of the inverses
 * of a = c r^T. With r^T d0 = 1, r^T d1 = 0, q0^T c = 1, q1^T c = 0 every
 * inverse u w^T (which needs (r^T u)(w^T c) = 1) is hit exactly once.
 */
struct InverseChart {
    Mat2 a;
    Rational2 d0;
    Rational2 d1;
    Rational2 q0;
    Rational2 q1;

    Mat2 operator()(const Rational& s, const Rational& t) const { return outer(d0 + s * d1, q0 + t * q1); }

    /// Chart coordinates of an inverse of a, or nullopt if x is not one.
    std::optional<std::pair<Rational, Rational>> coords(const Mat2& x) const
    {
        if (!inverse_membership(a, x))
            return std::nullopt;
        const RankFactor f = rank_factor(a);
        // x = d q^T with r^T d = 1 fixes d = x c' for any c' with q^T c' = 1; take d = x c.
        const Rational2 d = x * f.col;
        const Rational2 q = transpose(x) * f.row;
        return std::pair{dot(d, d1) / dot(d1, d1), dot(q, q1) / dot(q1, q1)};
    }
};

inline InverseChart inverse_chart(const Mat2& a)
{
    require_rank_one(a, "inverse_chart");
    const RankFactor f = rank_factor(a);
    const Rational2 d1 = ProjLine(f.row).perp().vec();
    const Rational2 q1 = ProjLine(f.col).perp().vec();
    return {a, dot(f.row, f.row).inv() * f.row, d1, dot(f.col, f.col).inv() * f.col, q1};
}

inline Mat2 chart_eval(const InverseChart& ch, const Rational& s, const Rational& t) { return ch(s, t); }

enum class Family { L1, L2 };

inline const char* family_name(Family f) { return f == Family::L1 ? "L1" : "L2"; }

/// base + t dir, a line of rank-1 idempotents.
struct GeneratorLine {
    Mat2 base;
    Mat2 dir;
    Family family;

    Mat2 at(const Rational& t) const { return base + t * dir; }

    bool contains(const Mat2& x) const { return !independent(dir, x - base); }
};

inline void require_rank1_idempotent(const Mat2& e)
{
    if (!is_rank1_idempotent(e))
        throw domain_error(Errc::not_idempotent_rank1, to_string(e) + " is not a rank-1 idempotent");
}

/*
 * For e = u v^T (v^T u = 1): (I - e) M2 e = {p v^T : p on v_perp} spans the
 * L1 direction and e M2 (I - e) = {u q^T : q on u_perp} the L2 direction.
 */
inline GeneratorLine generator_line(Family family, const Mat2& e)
{
    require_rank1_idempotent(e);
    if (family == Family::L1) {
        const Rational2 v = rowspace(e).vec();
        return {e, outer(ProjLine(v).perp().vec(), v), family};
    }
    const Rational2 u = colspace(e).vec();
    return {e, outer(u, ProjLine(u).perp().vec()), family};
}

/// The unique common point of two generator lines; nullopt for disjoint or coincident lines.
inline std::optional<Mat2> line_meet(const GeneratorLine& g1, const GeneratorLine& g2)
{
    // t dir1 - u dir2 = base2 - base1
    RatMatrix a(4, RatVector(2));
    RatVector b(4);
    for (std::size_t i = 0; i < 4; ++i) {
        a[i][0] = g1.dir[i];
        a[i][1] = -g2.dir[i];
        b[i] = g2.base[i] - g1.base[i];
    }
    if (matrix_rank(a) < 2)
        return std::nullopt;
    const auto sol = solve_linear(a, b);
    if (!sol)
        return std::nullopt;
    return g1.at((*sol)[0]);
}

/// u v^T / (v^T u): the idempotent with column line `col` and row line `row`.
inline Mat2 idempotent_from_spaces(const ProjLine& col, const ProjLine& row)
{
    const Rational2 u = col.vec();
    const Rational2 v = row.vec();
    const Rational p = dot(v, u);
    if (p.is_zero())
        throw domain_error(Errc::degenerate_pairing,
                           "row " + row.str() + " annihilates column " + col.str() + "; the H-class has no idempotent");
    return p.inv() * outer(u, v);
}

/// rank(y - x) = rank(y) - rank(x).
inline bool minus_le(const Mat2& x, const Mat2& y) { return rank(y - x) == rank(y) - rank(x); }

/*
 * x <= y iff colspace(x) is inside colspace(y) and x = f y for some idempotent
 * f in the R-class of x. For rank-1 x = u z^T these idempotents are u w^T with
 * w = u / |u|^2 + s u_perp, leaving the linear equation y^T w = z in s.
 */
inline bool natural_le(const Mat2& x, const Mat2& y)
{
    if (x == y)
        return true;
    const int rx = rank(x);
    if (rx == 0)
        return true;
    if (rx == 2)
        return false; // E(R_x) = {I}
    const int ry = rank(y);
    if (ry == 0)
        return false;
    const Rational2 u = colspace(x).vec();
    if (ry == 1 && colspace(y) != colspace(x))
        return false;
    const Rational2 z = rank_factor(x).row;
    const Rational2 w0 = dot(u, u).inv() * u;
    const Rational2 up = ProjLine(u).perp().vec();
    const Mat2 yt = transpose(y);
    const Rational2 coef = yt * up;
    const Rational2 rhs = z - yt * w0;
    RatMatrix a{{coef.x}, {coef.y}};
    return solve_linear(a, {rhs.x, rhs.y}).has_value();
}

struct OrderSample {
    Mat2 x;
    bool le;
    bool in_section;     // x in SP(a;1)
    bool in_inv_section; // x in SP(a^-1;1)
};

struct OrderSectionReport {
    Mat2 a;
    std::uint64_t trials = 0;
    std::uint64_t agree_le_vs_inv_section = 0;
    std::uint64_t agree_le_vs_section = 0;
    std::uint64_t le_count = 0;
    /// Samples where natural_le disagrees with SP(a^-1;1) membership (at most 10 kept).
    std::vector<OrderSample> counterexamples;
    /// Samples where natural_le disagrees with SP(a;1) membership (at most 10 kept).
    std::vector<OrderSample> literal_mismatches;
};

/*
 * Tabulates natural_le(x, a) against membership of x in SP(a;1) and SP(a^-1;1)
 * for nonzero singular x. Draws rotate between a generic rank-1 matrix, a point
 * a f of SP(a^-1;1) and a point a^-1 f of SP(a;1) (f a random rank-1
 * idempotent) so both memberships occur. Trial i uses seed derive_seed(seed, i).
 */
inline OrderSectionReport order_section_report(const Mat2& a, std::uint64_t trials, std::uint64_t seed)
{
    const Mat2 ainv = inverse_mat(a);
    OrderSectionReport rep{a, trials};
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng rng(derive_seed(seed, i));
        Mat2 x;
        switch (i % 3) {
        case 0: x = rng.rank1(); break;
        case 1: x = a * rng.idempotent_rank1(); break;
        default: x = ainv * rng.idempotent_rank1(); break;
        }
        OrderSample s{x, natural_le(x, a), trace(a * x) == Rational(1) && det(x).is_zero(),
                      trace(ainv * x) == Rational(1) && det(x).is_zero()};
        rep.le_count += s.le ? 1 : 0;
        if (s.le == s.in_inv_section)
            ++rep.agree_le_vs_inv_section;
        else if (rep.counterexamples.size() < 10)
            rep.counterexamples.push_back(s);
        if (s.le == s.in_section)
            ++rep.agree_le_vs_section;
        else if (rep.literal_mismatches.size() < 10)
            rep.literal_mismatches.push_back(s);
    }
    return rep;
}

} // namespace gq
