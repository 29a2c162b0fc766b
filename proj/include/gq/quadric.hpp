#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "gq/exact_number.hpp"
#include "gq/linsolve.hpp"

namespace gq {

using Sym3 = std::array<std::array<Rational, 3>, 3>;
using RVec3 = std::array<Rational, 3>;

struct Inertia {
    int plus = 0;
    int minus = 0;
    int zero = 0;

    friend bool operator==(const Inertia&, const Inertia&) = default;

    int rank() const { return plus + minus; }
    Inertia flipped() const { return {minus, plus, zero}; }
};

inline Sym3 sym3_diag(Rational a, Rational b, Rational c)
{
    Sym3 q{};
    q[0][0] = std::move(a);
    q[1][1] = std::move(b);
    q[2][2] = std::move(c);
    return q;
}

/*
 * Sylvester inertia by exact symmetric Gaussian elimination. A nonzero
 * diagonal pivot splits off one square; when every remaining diagonal entry
 * vanishes but some q_ij does not, the block [[0, q],[q, 0]] (inertia (1,1))
 * is split off through its Schur complement.
 */
inline Inertia inertia(const RatMatrix& q)
{
    RatMatrix m = q;
    const std::size_t n = m.size();
    std::vector<bool> active(n, true);
    std::size_t left = n;
    Inertia out;
    while (left > 0) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && !m[i][i].is_zero()) {
                k = i;
                break;
            }
        if (k < n) {
            const Rational d = m[k][k];
            (d.sign() > 0 ? out.plus : out.minus) += 1;
            active[k] = false;
            --left;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (active[i] && active[j])
                        m[i][j] -= m[i][k] * m[k][j] / d;
            continue;
        }
        std::size_t bi = n, bj = n;
        for (std::size_t i = 0; i < n && bi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (active[i] && active[j] && !m[i][j].is_zero()) {
                    bi = i;
                    bj = j;
                    break;
                }
        if (bi == n) {
            out.zero += static_cast<int>(left);
            break;
        }
        const Rational b = m[bi][bj];
        active[bi] = active[bj] = false;
        left -= 2;
        out.plus += 1;
        out.minus += 1;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t r = 0; r < n; ++r)
                if (active[p] && active[r])
                    m[p][r] -= (m[p][bi] * m[bj][r] + m[p][bj] * m[bi][r]) / b;
    }
    return out;
}

inline Inertia inertia(const Sym3& q)
{
    RatMatrix m(3, RatVector(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m[i][j] = q[i][j];
    return inertia(m);
}

enum class QuadricClass {
    ellipsoid,
    hyperboloid_one_sheet,
    hyperboloid_two_sheets,
    cone,
    elliptic_paraboloid,
    hyperbolic_paraboloid,
    elliptic_cylinder,
    hyperbolic_cylinder,
    parabolic_cylinder,
    intersecting_planes,
    parallel_planes,
    coincident_planes,
    single_plane,
    line,
    point,
    empty,
    whole_space,
};

inline std::string_view to_string(QuadricClass c)
{
    switch (c) {
    case QuadricClass::ellipsoid: return "ellipsoid";
    case QuadricClass::hyperboloid_one_sheet: return "hyperboloid_of_one_sheet";
    case QuadricClass::hyperboloid_two_sheets: return "hyperboloid_of_two_sheets";
    case QuadricClass::cone: return "cone";
    case QuadricClass::elliptic_paraboloid: return "elliptic_paraboloid";
    case QuadricClass::hyperbolic_paraboloid: return "hyperbolic_paraboloid";
    case QuadricClass::elliptic_cylinder: return "elliptic_cylinder";
    case QuadricClass::hyperbolic_cylinder: return "hyperbolic_cylinder";
    case QuadricClass::parabolic_cylinder: return "parabolic_cylinder";
    case QuadricClass::intersecting_planes: return "intersecting_planes";
    case QuadricClass::parallel_planes: return "parallel_planes";
    case QuadricClass::coincident_planes: return "coincident_planes";
    case QuadricClass::single_plane: return "single_plane";
    case QuadricClass::line: return "line";
    case QuadricClass::point: return "point";
    case QuadricClass::empty: return "empty";
    case QuadricClass::whole_space: return "whole_space";
    }
    return "unknown";
}

/*
 * Real affine type of {t : t^T Q t + b^T t + c = 0} in 3-space.
 *
 * Central case (Q t = -b/2 solvable at t0): translate to s^T Q s = k with
 * k = -(c + b^T t0 / 2), then read the type off the inertia of Q and the sign
 * of k. Otherwise the linear part survives along ker Q and the type is
 * parabolic, fixed by rank and inertia of Q.
 */
inline QuadricClass classify_quadric(const Sym3& q, const RVec3& b, const Rational& c)
{
    Inertia in = inertia(q);
    const int r = in.rank();

    RatMatrix qm(3, RatVector(3));
    RatVector rhs(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j)
            qm[i][j] = q[i][j];
        rhs[i] = -b[i] / Rational(2);
    }
    const auto center = solve_linear(qm, rhs);

    if (!center) {
        if (r == 2)
            return (in.plus == 0 || in.minus == 0) ? QuadricClass::elliptic_paraboloid
                                                   : QuadricClass::hyperbolic_paraboloid;
        if (r == 1)
            return QuadricClass::parabolic_cylinder;
        return QuadricClass::single_plane;
    }

    Rational k = c;
    for (std::size_t i = 0; i < 3; ++i)
        k += b[i] * (*center)[i] / Rational(2);
    k = -k;
    if (k.sign() < 0) {
        k = -k;
        in = in.flipped();
    }

    if (k.is_zero()) {
        switch (r) {
        case 3: return (in.plus > 0 && in.minus > 0) ? QuadricClass::cone : QuadricClass::point;
        case 2: return (in.plus > 0 && in.minus > 0) ? QuadricClass::intersecting_planes : QuadricClass::line;
        case 1: return QuadricClass::coincident_planes;
        default: return QuadricClass::whole_space;
        }
    }
    switch (r) {
    case 3:
        if (in.minus == 0)
            return QuadricClass::ellipsoid;
        if (in.minus == 1)
            return QuadricClass::hyperboloid_one_sheet;
        if (in.minus == 2)
            return QuadricClass::hyperboloid_two_sheets;
        return QuadricClass::empty;
    case 2:
        if (in.minus == 0)
            return QuadricClass::elliptic_cylinder;
        if (in.plus == 1)
            return QuadricClass::hyperbolic_cylinder;
        return QuadricClass::empty;
    case 1: return in.plus == 1 ? QuadricClass::parallel_planes : QuadricClass::empty;
    default: return QuadricClass::empty;
    }
}

} // namespace gq
