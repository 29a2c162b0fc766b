#include <gtest/gtest.h>

#include <variant>

#include "gq/random.hpp"
#include "gq/sections.hpp"
#include "gq/special_sets.hpp"
#include "test_support.hpp"

using namespace gq;
using gq::testing::E;
using gq::testing::M;
using gq::testing::Q;

namespace {

const QuadExt kInvSqrt2(Rational(0), Rational(mpz_class(1), mpz_class(2)));

Mat2Q2 lift(const Mat2& x) { return {QuadExt(x.x1), QuadExt(x.x2), QuadExt(x.x3), QuadExt(x.x4)}; }

// The frame points O', A, B, C of P(I; lambda).
Mat2Q2 frame_origin(const Rational& l)
{
    const QuadExt h(l / Rational(2));
    return {h, 0, 0, h};
}
Mat2Q2 frame_a(const Rational& l)
{
    const QuadExt h(l / Rational(2));
    return {h + kInvSqrt2, 0, 0, h - kInvSqrt2};
}
Mat2Q2 frame_b(const Rational& l)
{
    const QuadExt h(l / Rational(2));
    return {h, kInvSqrt2, kInvSqrt2, h};
}
Mat2Q2 frame_c(const Rational& l)
{
    const QuadExt h(l / Rational(2));
    return {h, -kInvSqrt2, kInvSqrt2, h};
}

Mat2 random_coefficients(Rng& rng, int rk)
{
    switch (rk) {
    case 0: return Mat2::zero();
    case 1: return rng.rank1();
    default: return rng.nonsingular();
    }
}

} // namespace

TEST(Sections, Membership)
{
    EXPECT_TRUE(section_membership({Mat2::identity(), 1}, M("[1/2,1/2;1/2,1/2]")));
    EXPECT_FALSE(membership({Mat2::identity(), 1}, Mat2::identity()));
    EXPECT_TRUE(section_membership({E(), 1}, M("[1,2;3,6]")));
    EXPECT_FALSE(section_membership({E(), 1}, M("[1,2;3,7]")));
}

TEST(Sections, Normalize)
{
    EXPECT_EQ(normalize({Mat2::identity(), 2}), (Hyperplane{Q("1/2") * Mat2::identity(), 1}));
    EXPECT_EQ(normalize({E(), -1}), (Hyperplane{-E(), 1}));
    try {
        (void)normalize({E(), 0});
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_EQ(e.code(), Errc::zero_lambda);
    }
    Rng rng(81);
    for (int i = 0; i < 300; ++i) {
        const Hyperplane h{rng.nonsingular(), rng.nonzero_rational()};
        const Hyperplane n = normalize(h);
        // A point of h and a random point agree on membership.
        const Mat2 on = (h.lambda / norm_sq(h.a)) * transpose(h.a);
        EXPECT_TRUE(membership(h, on));
        EXPECT_TRUE(membership(n, on));
        const Mat2 x = rng.mat();
        EXPECT_EQ(membership(h, x), membership(n, x));
    }
}

TEST(Sections, BellFrameIsOrthonormal)
{
    for (const Rational& l : {Rational(0), Rational(1), Q("-3/2")}) {
        const Mat2Q2 o = frame_origin(l);
        const Mat2Q2 oa = frame_a(l) - o, ob = frame_b(l) - o, oc = frame_c(l) - o;
        EXPECT_EQ(inner(oa, oa), QuadExt(1));
        EXPECT_EQ(inner(ob, ob), QuadExt(1));
        EXPECT_EQ(inner(oc, oc), QuadExt(1));
        EXPECT_EQ(inner(oa, ob), QuadExt(0));
        EXPECT_EQ(inner(oa, oc), QuadExt(0));
        EXPECT_EQ(inner(ob, oc), QuadExt(0));
    }
}

TEST(Sections, BellExamples)
{
    const Rational l = Q("5/3");
    EXPECT_EQ(to_bell((l / Rational(2)) * Mat2::identity(), l), (BellPoint{0, 0, 0, l}));
    EXPECT_EQ(to_bell(frame_a(l), l), (BellPoint{1, 0, 0, l}));
    EXPECT_EQ(to_bell(frame_b(l), l), (BellPoint{0, 1, 0, l}));
    EXPECT_EQ(to_bell(frame_c(l), l), (BellPoint{0, 0, 1, l}));
    EXPECT_EQ(to_bell(E(), 1), (BellPoint{kInvSqrt2, 0, 0, 1}));
    try {
        (void)to_bell(E(), 2);
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_EQ(e.code(), Errc::not_on_hyperplane);
    }
}

TEST(Sections, BellRoundTrip)
{
    Rng rng(82);
    for (int i = 0; i < 1000; ++i) {
        const Mat2 x = rng.mat();
        const BellPoint p = to_bell(x, trace(x));
        EXPECT_EQ(from_bell(p), lift(x));
        // And the other way, starting from a point with irrational coordinates.
        const BellPoint b{QuadExt(rng.rational(), rng.rational()), QuadExt(rng.rational(), rng.rational()),
                          QuadExt(rng.rational(), rng.rational()), rng.rational()};
        EXPECT_EQ(to_bell(from_bell(b), b.lambda), b);
    }
}

TEST(Sections, BellResidual)
{
    EXPECT_EQ(bell_residual(E()), Rational(0));
    EXPECT_EQ(bell_residual(Mat2::identity()), Rational(-2));
    EXPECT_EQ(bell_residual(M("[0,1;0,0]")), Rational(0));
    Rng rng(83);
    for (int i = 0; i < 2000; ++i) {
        const Mat2 x = (i % 2 == 0) ? rng.singular() : rng.mat();
        const Rational r = bell_residual(x);
        EXPECT_EQ(r.is_zero(), det(x).is_zero());
        EXPECT_EQ(r, Rational(-2) * det(x));
    }
}

TEST(Sections, RestrictQuadricExamples)
{
    for (const Rational& l : {Rational(1), Rational(0), Q("-7/2")}) {
        const auto q = restrict_quadric({Mat2::identity(), l});
        const Inertia in = inertia(q.Q);
        EXPECT_TRUE(in == (Inertia{2, 1, 0}) || in == (Inertia{1, 2, 0}));
    }

    const auto pe = restrict_quadric({E(), 1});
    // chart t = (x2, x3, x4) on x1 = 1: det = x4 - x2 x3
    EXPECT_EQ(pe.chart.origin, E());
    EXPECT_EQ(pe.Q[0][1], Q("-1/2"));
    EXPECT_EQ(pe.Q[0][0], Rational(0));
    EXPECT_EQ(pe.Q[2][2], Rational(0));
    EXPECT_EQ(pe.b, (RVec3{0, 0, 1}));
    EXPECT_EQ(pe.c, Rational(0));
    EXPECT_EQ(inertia(pe.Q), (Inertia{1, 1, 1}));
    EXPECT_EQ(classify_affine_quadric(pe), QuadricClass::hyperbolic_paraboloid);

    const auto pe0 = restrict_quadric({E(), 0});
    EXPECT_EQ(pe0.b, (RVec3{0, 0, 0}));
    EXPECT_EQ(pe0.c, Rational(0));
    EXPECT_EQ(classify_affine_quadric(pe0), QuadricClass::intersecting_planes);

    try {
        (void)restrict_quadric({Mat2::zero(), 1});
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_EQ(e.code(), Errc::zero_coefficient_matrix);
    }
}

TEST(Sections, RestrictionIdentityRandomized)
{
    Rng rng(84);
    for (int i = 0; i < 200; ++i) {
        const Hyperplane h{(i % 2 == 0) ? rng.rank1() : rng.nonsingular(), rng.rational()};
        const auto q = restrict_quadric(h);
        for (int k = 0; k < 100; ++k) {
            const RVec3 t{rng.rational(), rng.rational(), rng.rational()};
            const Mat2 x = q.chart.point(t);
            ASSERT_TRUE(membership(h, x));
            EXPECT_EQ(det(x), q.eval(t));
        }
    }
}

TEST(Sections, AffineClassIndependentOfChart)
{
    Rng rng(85);
    for (int i = 0; i < 300; ++i) {
        const Hyperplane h{random_coefficients(rng, 1 + static_cast<int>(rng.uniform(0, 1))),
                           (i % 2 == 0) ? Rational(0) : rng.nonzero_rational()};
        const Chart base = default_chart(h);
        Chart other = base;
        RatMatrix g(3, RatVector(3));
        do {
            for (auto& row : g)
                for (auto& v : row)
                    v = rng.rational(3, 2);
        } while (matrix_rank(g) < 3);
        for (int r = 0; r < 3; ++r)
            other.basis[r] = g[r][0] * base.basis[0] + g[r][1] * base.basis[1] + g[r][2] * base.basis[2];
        other.origin = base.point({rng.rational(), rng.rational(), rng.rational()});
        EXPECT_EQ(classify_affine_quadric(restrict_quadric(h, other)),
                  classify_affine_quadric(restrict_quadric(h, base)));
    }
    // Bad charts are rejected.
    const Hyperplane h{E(), 1};
    Chart bad = default_chart(h);
    bad.origin = Mat2::zero();
    EXPECT_THROW(restrict_quadric(h, bad), domain_error);
    bad = default_chart(h);
    bad.basis[2] = bad.basis[1];
    EXPECT_THROW(restrict_quadric(h, bad), domain_error);
}

TEST(Sections, ClassifySectionExamples)
{
    EXPECT_TRUE(std::holds_alternative<HyperboloidOneSheet>(classify_section(Mat2::identity(), 1)));
    EXPECT_TRUE(std::holds_alternative<HyperbolicParaboloid>(classify_section(E(), 1)));
    const SectionClass s = classify_section(E(), 0);
    ASSERT_TRUE(std::holds_alternative<TwoPuncturedPlanesPlusOrigin>(s));
    const auto& planes = std::get<TwoPuncturedPlanesPlusOrigin>(s);
    EXPECT_EQ(rowspace(planes.l_rep), ProjLine(0, 1));
    EXPECT_EQ(colspace(planes.r_rep), ProjLine(0, 1));
    EXPECT_EQ(planes.l_rep, M("[0,0;0,1]"));
    EXPECT_EQ(planes.r_rep, M("[0,0;0,1]"));
    EXPECT_TRUE(std::holds_alternative<Cone>(classify_section(M("[1,2;3,4]"), 0)));
    EXPECT_TRUE(std::holds_alternative<FullVariety>(classify_section(Mat2::zero(), 0)));
    EXPECT_TRUE(std::holds_alternative<EmptySection>(classify_section(Mat2::zero(), 3)));
    EXPECT_EQ(section_name(s), "TwoPuncturedPlanesPlusOrigin");
}

TEST(Sections, ClassifierAgreementStratified)
{
    Rng rng(86);
    for (int i = 0; i < 1200; ++i) {
        const int rk = i % 3;
        const Mat2 a = random_coefficients(rng, rk);
        const Rational l = (i / 3) % 2 == 0 ? Rational(0) : rng.nonzero_rational();
        const SectionClass s = classify_section(a, l);
        const auto expected = expected_affine_class(s);
        if (rk == 0) {
            EXPECT_FALSE(expected.has_value());
            continue;
        }
        ASSERT_TRUE(expected.has_value());
        EXPECT_EQ(section_affine_class(a, l), *expected) << a << " " << l;
    }
}

TEST(Sections, DegenerateSectionIsTheTwoClasses)
{
    Rng rng(87);
    for (int i = 0; i < 200; ++i) {
        const Mat2 a = rng.rank1();
        const auto planes = std::get<TwoPuncturedPlanesPlusOrigin>(classify_section(a, 0));
        EXPECT_TRUE(section_membership({a, 0}, planes.l_rep));
        EXPECT_TRUE(section_membership({a, 0}, planes.r_rep));
        for (int k = 0; k < 10; ++k) {
            const Mat2 x = rng.rank1();
            const bool in = section_membership({a, 0}, x);
            EXPECT_EQ(in, green_eq(Relation::L, x, planes.l_rep) || green_eq(Relation::R, x, planes.r_rep));
            const PlaneBasis lp = class_plane(Side::L, planes.l_rep);
            const Mat2 y = rng.rational() * lp.b1 + rng.nonzero_rational() * lp.b2;
            EXPECT_TRUE(section_membership({a, 0}, y));
        }
    }
}

TEST(Sections, InverseImageLaw)
{
    Rng rng(88);
    for (int i = 0; i < 500; ++i) {
        const Mat2 a = rng.nonsingular();
        const Mat2 x = (i % 2 == 0) ? inverse_mat(a) * rng.idempotent_rank1() : rng.singular();
        EXPECT_EQ(section_membership({a, 1}, x), is_rank1_idempotent(a * x));
    }
}

TEST(Sections, HyperboloidMetrics)
{
    const auto m1 = hyperboloid_metrics(1);
    EXPECT_EQ(m1.center, M("[1/2,0;0,1/2]"));
    EXPECT_EQ(m1.radius_sq, Q("1/2"));
    EXPECT_EQ(m1.axis_dir, M("[0,1;-1,0]"));
    EXPECT_EQ(m1.asymptotic_Q, sym3_diag(1, 1, -1));
    EXPECT_EQ(hyperboloid_metrics(0).radius_sq, Rational(0));
    EXPECT_EQ(hyperboloid_metrics(3).asymptotic_Q, hyperboloid_metrics(5).asymptotic_Q);

    Rng rng(89);
    for (int i = 0; i < 100; ++i) {
        const Rational l = rng.rational();
        const auto m = hyperboloid_metrics(l);
        EXPECT_EQ(m.asymptotic_Q, m1.asymptotic_Q);
        EXPECT_EQ(lift(m.center), from_bell({0, 0, 0, l}));
        EXPECT_EQ(m.center, l * m1.center);
        EXPECT_EQ(m.radius_sq, l * l / Rational(2));
        // The axis X = Y = 0 through the center.
        const Mat2 p = m.center + rng.rational() * m.axis_dir;
        const BellPoint b = to_bell(p, l);
        EXPECT_TRUE(b.X.is_zero() && b.Y.is_zero());
        // Center and axis direction are orthogonal to the surface's symmetric slice normal.
        EXPECT_EQ(inner(m.axis_dir, Mat2::identity()), Rational(0));
    }
}

TEST(Sections, PrincipalCircularSectionIsSymmetricIdempotents)
{
    Rng rng(90);
    const Mat2 c = hyperboloid_metrics(1).center;
    for (int i = 0; i < 500; ++i) {
        const Rational2 u = rng.primitive_vec(6);
        const Mat2 x = dot(u, u).inv() * outer(u, u); // symmetric rank-1 idempotent
        ASSERT_TRUE(is_rank1_idempotent(x));
        EXPECT_EQ(norm_sq(x - c), Q("1/2"));
        EXPECT_TRUE(to_bell(x, 1).Z.is_zero());
        // Conversely a rank-1 idempotent with Z = 0 is symmetric.
        const Mat2 f = rng.idempotent_rank1();
        EXPECT_EQ(to_bell(f, 1).Z.is_zero(), f.x2 == f.x3);
    }
}
