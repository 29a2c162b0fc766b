#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "gq/errors.hpp"
#include "gq/green.hpp"
#include "gq/mat2.hpp"
#include "gq/quadric.hpp"

namespace gq {

/// The affine 3-space P(a; lambda) = {x : tr(a x) = lambda}.
struct Hyperplane {
    Mat2 a;
    Rational lambda;

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

inline bool membership(const Hyperplane& h, const Mat2& x) { return trace(h.a * x) == h.lambda; }

/// x in SP(a; lambda): on the hyperplane and singular.
inline bool section_membership(const Hyperplane& h, const Mat2& x) { return membership(h, x) && det(x).is_zero(); }

/// P(a; lambda) = P(a / lambda; 1).
inline Hyperplane normalize(const Hyperplane& h)
{
    if (h.lambda.is_zero())
        throw domain_error(Errc::zero_lambda, "cannot normalize a hyperplane through the origin");
    return {h.lambda.inv() * h.a, Rational(1)};
}

// ---------------------------------------------------------------------------
// Bell frame of P(I; lambda)
// ---------------------------------------------------------------------------

/*
 * Orthonormal coordinates in P(I; lambda) centred at (lambda/2) I with axes
 *   A - O' = (1, 0, 0, -1)/sqrt2,  B - O' = (0, 1, 1, 0)/sqrt2,  C - O' = (0, -1, 1, 0)/sqrt2,
 * so that
 *   x1 = lambda/2 + X/sqrt2,  x2 = (Y - Z)/sqrt2,  x3 = (Y + Z)/sqrt2,  x4 = lambda/2 - X/sqrt2.
 */
struct BellPoint {
    QuadExt X;
    QuadExt Y;
    QuadExt Z;
    Rational lambda;

    friend bool operator==(const BellPoint&, const BellPoint&) = default;
};

namespace detail {
inline QuadExt to_quadext(const Rational& r) { return QuadExt(r); }
inline QuadExt to_quadext(const QuadExt& q) { return q; }
inline const QuadExt& inv_sqrt2()
{
    static const QuadExt v(Rational(0), Rational(mpz_class(1), mpz_class(2)));
    return v;
}
} // namespace detail

template <class T>
BellPoint to_bell(const Mat2T<T>& x, const Rational& lambda)
{
    const QuadExt x1 = detail::to_quadext(x.x1);
    const QuadExt x2 = detail::to_quadext(x.x2);
    const QuadExt x3 = detail::to_quadext(x.x3);
    const QuadExt x4 = detail::to_quadext(x.x4);
    if (x1 + x4 != QuadExt(lambda))
        throw domain_error(Errc::not_on_hyperplane, "point " + to_string(x) + " does not have trace " + lambda.str());
    const QuadExt& k = detail::inv_sqrt2();
    return {(x1 - x4) * k, (x2 + x3) * k, (x3 - x2) * k, lambda};
}

inline Mat2Q2 from_bell(const BellPoint& p)
{
    const QuadExt half = QuadExt(Rational(mpz_class(1), mpz_class(2)) * p.lambda);
    const QuadExt& k = detail::inv_sqrt2();
    return {half + p.X * k, (p.Y - p.Z) * k, (p.Y + p.Z) * k, half - p.X * k};
}

/// X^2 + Y^2 - Z^2 - lambda^2/2 with lambda = tr(x); zero exactly on singular x.
inline Rational bell_residual(const Mat2& x)
{
    const Rational lambda = trace(x);
    const BellPoint p = to_bell(x, lambda);
    const QuadExt r = p.X * p.X + p.Y * p.Y - p.Z * p.Z - QuadExt(lambda * lambda / Rational(2));
    if (!r.is_rational())
        throw std::logic_error("Bell residual left Q");
    return r.rat_part();
}

// ---------------------------------------------------------------------------
// Restriction of det to a hyperplane
// ---------------------------------------------------------------------------

/// Rational affine frame of a hyperplane: origin on it, basis of its direction space.
struct Chart {
    Mat2 origin;
    std::array<Mat2, 3> basis;

    Mat2 point(const RVec3& t) const
    {
        return origin + t[0] * basis[0] + t[1] * basis[1] + t[2] * basis[2];
    }
};

/// det(origin + sum t_i v_i) = t^T Q t + b^T t + c.
struct AffineQuadric3 {
    Sym3 Q;
    RVec3 b;
    Rational c;
    Chart chart;

    Rational eval(const RVec3& t) const
    {
        Rational v = c;
        for (std::size_t i = 0; i < 3; ++i) {
            v += b[i] * t[i];
            for (std::size_t j = 0; j < 3; ++j)
                v += Q[i][j] * t[i] * t[j];
        }
        return v;
    }
};

/// Symmetric bilinear form of det: B(x, x) = det(x).
inline Rational det_polar(const Mat2& x, const Mat2& y)
{
    return (x.x1 * y.x4 + x.x4 * y.x1 - x.x2 * y.x3 - x.x3 * y.x2) / Rational(2);
}

/*
 * Default chart: x -> tr(a x) is the 4-space functional with coefficient
 * vector a^T, so origin = lambda a^T / <a, a>, and the direction space is
 * spanned by E_j - (g_j / g_k) E_k for j != k, k the first nonzero entry of a^T.
 */
inline Chart default_chart(const Hyperplane& h)
{
    if (h.a.is_zero())
        throw domain_error(Errc::zero_coefficient_matrix, "P(0; lambda) is not a hyperplane");
    const Mat2 g = transpose(h.a);
    std::size_t k = 0;
    while (g[k].is_zero())
        ++k;
    const auto units = unit_matrices();
    Chart ch{(h.lambda / norm_sq(g)) * g, {}};
    std::size_t slot = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        if (j == k)
            continue;
        ch.basis[slot++] = units[j] - (g[j] / g[k]) * units[k];
    }
    return ch;
}

inline AffineQuadric3 restrict_quadric(const Hyperplane& h, const Chart& ch)
{
    if (h.a.is_zero())
        throw domain_error(Errc::zero_coefficient_matrix, "P(0; lambda) is not a hyperplane");
    if (!membership(h, ch.origin))
        throw domain_error(Errc::not_on_hyperplane, "chart origin is off the hyperplane");
    RatMatrix span(3, RatVector(4));
    for (std::size_t i = 0; i < 3; ++i) {
        if (!trace(h.a * ch.basis[i]).is_zero())
            throw domain_error(Errc::not_on_hyperplane, "chart direction leaves the hyperplane");
        for (std::size_t j = 0; j < 4; ++j)
            span[i][j] = ch.basis[i][j];
    }
    if (matrix_rank(span) != 3)
        throw domain_error(Errc::dependent_basis, "chart directions are linearly dependent");

    AffineQuadric3 q{{}, {}, det(ch.origin), ch};
    for (std::size_t i = 0; i < 3; ++i) {
        q.b[i] = Rational(2) * det_polar(ch.origin, ch.basis[i]);
        for (std::size_t j = 0; j < 3; ++j)
            q.Q[i][j] = det_polar(ch.basis[i], ch.basis[j]);
    }
    return q;
}

inline AffineQuadric3 restrict_quadric(const Hyperplane& h) { return restrict_quadric(h, default_chart(h)); }

inline QuadricClass classify_affine_quadric(const AffineQuadric3& q) { return classify_quadric(q.Q, q.b, q.c); }

// ---------------------------------------------------------------------------
// Section classifier
// ---------------------------------------------------------------------------

struct EmptySection {
    friend bool operator==(const EmptySection&, const EmptySection&) = default;
};
struct FullVariety {
    friend bool operator==(const FullVariety&, const FullVariety&) = default;
};
struct HyperboloidOneSheet {
    friend bool operator==(const HyperboloidOneSheet&, const HyperboloidOneSheet&) = default;
};
struct Cone {
    friend bool operator==(const Cone&, const Cone&) = default;
};
struct HyperbolicParaboloid {
    friend bool operator==(const HyperbolicParaboloid&, const HyperbolicParaboloid&) = default;
};
/// SP(a;0) for rank-1 a: the L-class of l_rep, the R-class of r_rep, and 0.
struct TwoPuncturedPlanesPlusOrigin {
    Mat2 l_rep;
    Mat2 r_rep;
    friend bool operator==(const TwoPuncturedPlanesPlusOrigin&, const TwoPuncturedPlanesPlusOrigin&) = default;
};

using SectionClass = std::variant<EmptySection, FullVariety, HyperboloidOneSheet, Cone, HyperbolicParaboloid,
                                  TwoPuncturedPlanesPlusOrigin>;

inline std::string_view section_name(const SectionClass& s)
{
    static constexpr std::string_view names[] = {"Empty", "FullVariety", "HyperboloidOneSheet", "Cone",
                                                 "HyperbolicParaboloid", "TwoPuncturedPlanesPlusOrigin"};
    return names[s.index()];
}

/*
 * Case table over (rank a, lambda = 0?). For rank-1 a = c r^T and lambda = 0 a
 * rank-1 x = u w^T is in the section iff (r^T u)(w^T c) = 0, i.e. x lies in the
 * L-class with row line c_perp or the R-class with column line r_perp.
 */
inline SectionClass classify_section(const Mat2& a, const Rational& lambda)
{
    switch (rank(a)) {
    case 0:
        if (lambda.is_zero())
            return FullVariety{};
        return EmptySection{};
    case 2:
        if (lambda.is_zero())
            return Cone{};
        return HyperboloidOneSheet{};
    default:
        if (!lambda.is_zero())
            return HyperbolicParaboloid{};
        const RankFactor f = rank_factor(a);
        const Rational2 p = ProjLine(f.col).perp().vec();
        const Rational2 q = ProjLine(f.row).perp().vec();
        return TwoPuncturedPlanesPlusOrigin{outer(p, p), outer(q, q)};
    }
}

/// The affine type the generic pipeline must report for a section verdict (none for a = 0).
inline std::optional<QuadricClass> expected_affine_class(const SectionClass& s)
{
    switch (s.index()) {
    case 2: return QuadricClass::hyperboloid_one_sheet;
    case 3: return QuadricClass::cone;
    case 4: return QuadricClass::hyperbolic_paraboloid;
    case 5: return QuadricClass::intersecting_planes;
    default: return std::nullopt;
    }
}

inline QuadricClass section_affine_class(const Mat2& a, const Rational& lambda)
{
    return classify_affine_quadric(restrict_quadric(Hyperplane{a, lambda}));
}

// ---------------------------------------------------------------------------
// Metric data of SP(I; lambda)
// ---------------------------------------------------------------------------

struct HyperboloidMetrics {
    Mat2 center;
    Mat2 axis_dir;
    Rational radius_sq;
    Sym3 asymptotic_Q;
};

/*
 * The asymptotic form is read off det o from_bell by second differences:
 * det(from_bell(X, Y, Z)) = lambda^2/4 - (X^2 + Y^2 - Z^2)/2, so -2 times its
 * quadratic part is the cone X^2 + Y^2 - Z^2.
 */
inline HyperboloidMetrics hyperboloid_metrics(const Rational& lambda)
{
    auto f = [&](int X, int Y, int Z) {
        return det(from_bell(BellPoint{QuadExt(X), QuadExt(Y), QuadExt(Z), lambda}));
    };
    auto at = [&](const std::array<int, 3>& t) { return f(t[0], t[1], t[2]); };
    const QuadExt f0 = f(0, 0, 0);
    Sym3 q{};
    for (int i = 0; i < 3; ++i) {
        std::array<int, 3> ei{}, e2i{};
        ei[i] = 1;
        e2i[i] = 2;
        for (int j = 0; j < 3; ++j) {
            QuadExt h;
            if (i == j) {
                h = (at(e2i) - QuadExt(2) * at(ei) + f0) * QuadExt(Rational(mpz_class(1), mpz_class(2)));
            } else {
                std::array<int, 3> ej{}, eij{};
                ej[j] = 1;
                eij[i] = 1;
                eij[j] = 1;
                h = (at(eij) - at(ei) - at(ej) + f0) * QuadExt(Rational(mpz_class(1), mpz_class(2)));
            }
            if (!h.is_rational())
                throw std::logic_error("Bell quadratic form left Q");
            q[i][j] = Rational(-2) * h.rat_part();
        }
    }
    const Rational half = Rational(mpz_class(1), mpz_class(2));
    return {(half * lambda) * Mat2::identity(), Mat2{0, 1, -1, 0}, half * lambda * lambda, q};
}

} // namespace gq
