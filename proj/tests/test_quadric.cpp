#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "gq/quadric.hpp"
#include "gq/random.hpp"
#include "test_support.hpp"

using namespace gq;
using gq::testing::Q;

namespace {

/*
 * Inertia oracle independent of elimination: the characteristic polynomial
 * of a real symmetric matrix has only real roots, so Descartes' rule of signs
 * counts the positive roots exactly; p(-t) gives the negative ones.
 */
Inertia descartes_inertia(const Sym3& q)
{
    // det(tI - Q) = t^3 - c2 t^2 + c1 t - c0
    const Rational c2 = q[0][0] + q[1][1] + q[2][2];
    const Rational c1 = q[0][0] * q[1][1] - q[0][1] * q[1][0] + q[0][0] * q[2][2] - q[0][2] * q[2][0] +
                        q[1][1] * q[2][2] - q[1][2] * q[2][1];
    const Rational c0 = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
                        q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
                        q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
    const std::vector<Rational> pos{Rational(1), -c2, c1, -c0}; // descending powers
    const std::vector<Rational> neg{Rational(-1), -c2, -c1, -c0};
    auto changes = [](const std::vector<Rational>& co) {
        int n = 0, last = 0;
        for (const auto& c : co) {
            if (c.sign() == 0)
                continue;
            if (last != 0 && c.sign() != last)
                ++n;
            last = c.sign();
        }
        return n;
    };
    int zero = 0;
    if (c0.is_zero())
        zero = c1.is_zero() ? (c2.is_zero() ? 3 : 2) : 1;
    return {changes(pos), changes(neg), zero};
}

Sym3 random_sym(Rng& rng, int rank_hint)
{
    // M^T D M with D diagonal of the requested rank keeps generic and degenerate cases both common.
    Sym3 d{};
    for (int i = 0; i < 3; ++i)
        d[i][i] = i < rank_hint ? rng.nonzero_rational() : Rational(0);
    Sym3 m{};
    for (auto& row : m)
        for (auto& v : row)
            v = rng.rational(4, 3);
    Sym3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                out[i][j] += m[k][i] * d[k][k] * m[k][j];
    return out;
}

struct Equation {
    Sym3 q;
    RVec3 b;
    Rational c;
};

// Substitute t = M s + v and scale by k != 0.
Equation affine_image(const Equation& e, const Sym3& m, const RVec3& v, const Rational& k)
{
    Equation out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational acc;
            for (int p = 0; p < 3; ++p)
                for (int r = 0; r < 3; ++r)
                    acc += m[p][i] * e.q[p][r] * m[r][j];
            out.q[i][j] = k * acc;
        }
    // linear part: M^T (2 Q v + b)
    RVec3 w{};
    for (int p = 0; p < 3; ++p) {
        w[p] = e.b[p];
        for (int r = 0; r < 3; ++r)
            w[p] += Rational(2) * e.q[p][r] * v[r];
    }
    for (int i = 0; i < 3; ++i) {
        Rational acc;
        for (int p = 0; p < 3; ++p)
            acc += m[p][i] * w[p];
        out.b[i] = k * acc;
    }
    Rational c = e.c;
    for (int p = 0; p < 3; ++p) {
        c += e.b[p] * v[p];
        for (int r = 0; r < 3; ++r)
            c += e.q[p][r] * v[p] * v[r];
    }
    out.c = k * c;
    return out;
}

Equation eq(Sym3 q, RVec3 b, Rational c) { return {std::move(q), std::move(b), std::move(c)}; }

Sym3 xy_form()
{
    Sym3 q{};
    q[0][1] = q[1][0] = Rational(mpz_class(1), mpz_class(2));
    return q;
}

} // namespace

TEST(Inertia, Examples)
{
    EXPECT_EQ(inertia(sym3_diag(1, 1, -1)), (Inertia{2, 1, 0}));
    EXPECT_EQ(inertia(Sym3{}), (Inertia{0, 0, 3}));
    EXPECT_EQ(inertia(xy_form()), (Inertia{1, 1, 1}));
    Sym3 q{};
    q[0][1] = q[1][0] = 1;
    q[0][2] = q[2][0] = 1;
    q[1][2] = q[2][1] = 1;
    EXPECT_EQ(inertia(q), (Inertia{1, 2, 0}));
}

TEST(Inertia, MatchesDescartesOracle)
{
    Rng rng(71);
    for (int i = 0; i < 3000; ++i) {
        Sym3 q;
        if (i % 3 == 0) {
            // Zero diagonals force the 2x2 block branch.
            q = Sym3{};
            q[0][1] = q[1][0] = rng.rational(2, 2);
            q[0][2] = q[2][0] = rng.rational(2, 2);
            q[1][2] = q[2][1] = rng.rational(2, 2);
        } else {
            q = random_sym(rng, static_cast<int>(rng.uniform(0, 3)));
        }
        EXPECT_EQ(inertia(q), descartes_inertia(q));
    }
}

TEST(QuadricClassify, Examples)
{
    EXPECT_EQ(classify_quadric(sym3_diag(1, 1, -1), {}, Q("-1/2")), QuadricClass::hyperboloid_one_sheet);
    EXPECT_EQ(classify_quadric(sym3_diag(1, 1, -1), {}, Q("0")), QuadricClass::cone);
    EXPECT_EQ(classify_quadric(xy_form(), {0, 0, -1}, Q("0")), QuadricClass::hyperbolic_paraboloid);
}

TEST(QuadricClassify, AffinelyInvariantOnCanonicalForms)
{
    const Rational one(1);
    const std::vector<std::pair<Equation, QuadricClass>> canon{
        {eq(sym3_diag(1, 1, 1), {}, -one), QuadricClass::ellipsoid},
        {eq(sym3_diag(1, 1, -1), {}, -one), QuadricClass::hyperboloid_one_sheet},
        {eq(sym3_diag(1, -1, -1), {}, -one), QuadricClass::hyperboloid_two_sheets},
        {eq(sym3_diag(1, 1, -1), {}, 0), QuadricClass::cone},
        {eq(sym3_diag(1, 1, 0), {0, 0, -1}, 0), QuadricClass::elliptic_paraboloid},
        {eq(sym3_diag(1, -1, 0), {0, 0, -1}, 0), QuadricClass::hyperbolic_paraboloid},
        {eq(sym3_diag(1, 1, 0), {}, -one), QuadricClass::elliptic_cylinder},
        {eq(sym3_diag(1, -1, 0), {}, -one), QuadricClass::hyperbolic_cylinder},
        {eq(sym3_diag(1, 0, 0), {0, -1, 0}, 0), QuadricClass::parabolic_cylinder},
        {eq(sym3_diag(1, -1, 0), {}, 0), QuadricClass::intersecting_planes},
        {eq(sym3_diag(1, 0, 0), {}, -one), QuadricClass::parallel_planes},
        {eq(sym3_diag(1, 0, 0), {}, 0), QuadricClass::coincident_planes},
        {eq(Sym3{}, {1, 0, 0}, 0), QuadricClass::single_plane},
        {eq(sym3_diag(1, 1, 0), {}, 0), QuadricClass::line},
        {eq(sym3_diag(1, 1, 1), {}, 0), QuadricClass::point},
        {eq(sym3_diag(1, 1, 1), {}, one), QuadricClass::empty},
        {eq(sym3_diag(1, 1, 0), {}, one), QuadricClass::empty},
        {eq(sym3_diag(1, 0, 0), {}, one), QuadricClass::empty},
        {eq(Sym3{}, {}, one), QuadricClass::empty},
        {eq(Sym3{}, {}, 0), QuadricClass::whole_space},
    };
    Rng rng(72);
    for (const auto& [e, expected] : canon) {
        EXPECT_EQ(classify_quadric(e.q, e.b, e.c), expected) << to_string(expected);
        for (int i = 0; i < 100; ++i) {
            Sym3 m{};
            RatMatrix mm(3, RatVector(3));
            do {
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c)
                        mm[r][c] = m[r][c] = rng.rational(5, 3);
            } while (matrix_rank(mm) < 3);
            const RVec3 v{rng.rational(), rng.rational(), rng.rational()};
            const Equation img = affine_image(e, m, v, rng.nonzero_rational());
            EXPECT_EQ(classify_quadric(img.q, img.b, img.c), expected) << to_string(expected);
        }
    }
}
