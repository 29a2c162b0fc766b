#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "gq/exact_number.hpp"
#include "gq/random.hpp"
#include "test_support.hpp"

using namespace gq;
using gq::testing::Q;

namespace {

void expect_canonical(const Rational& r)
{
    EXPECT_GT(r.den(), 0);
    mpz_class g;
    mpz_class n = abs(r.num());
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), r.den().get_mpz_t());
    EXPECT_EQ(g, 1) << r;
}

} // namespace

TEST(Rational, ConstructionCanonicalizes)
{
    const Rational r(mpz_class(6), mpz_class(-4));
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(mpz_class(0), mpz_class(-7)).str(), "0");
    EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), domain_error);
}

TEST(Rational, CanonicalAfterEveryOperation)
{
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Rational a = rng.nonzero_rational(1000, 720);
        const Rational b = rng.nonzero_rational(1000, 720);
        expect_canonical(a + b);
        expect_canonical(a - b);
        expect_canonical(a * b);
        expect_canonical(a / b);
        EXPECT_EQ((a / b) * b, a);
        EXPECT_EQ((a - b) + b, a);
    }
}

TEST(Rational, DivisionByZero)
{
    EXPECT_THROW(Q("1") / Q("0"), domain_error);
    EXPECT_THROW(Q("0").inv(), domain_error);
    try {
        (void)(Q("2/3") / Rational(0));
    } catch (const domain_error& e) {
        EXPECT_EQ(e.code(), Errc::division_by_zero);
    }
}

TEST(Rational, Parse)
{
    EXPECT_EQ(Q("7"), Rational(7));
    EXPECT_EQ(Q("-3/6"), Rational(mpz_class(-1), mpz_class(2)));
    EXPECT_EQ(Q("0/5"), Rational(0));
    try {
        (void)Q("1/0");
        FAIL() << "expected parse_error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), 2u);
    }
    EXPECT_THROW(Q(""), parse_error);
    EXPECT_THROW(Q("1/"), parse_error);
    EXPECT_THROW(Q("--1"), parse_error);
    EXPECT_THROW(Q("1.5"), parse_error);
    EXPECT_THROW(Q("+1"), parse_error);
}

TEST(Rational, ToDoubleIsNearest)
{
    EXPECT_EQ(Q("1/2").to_double(), 0.5);
    EXPECT_EQ(Q("7/3").to_double(), 2.3333333333333335);
    // IEEE division of exactly representable integers is correctly rounded.
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const auto p = rng.uniform(-1000000, 1000000);
        const auto q = rng.uniform(1, 1000000);
        const Rational r(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
        EXPECT_EQ(r.to_double(), static_cast<double>(p) / static_cast<double>(q));
    }
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
    EXPECT_EQ(Rational(big, 1).to_double(), std::numeric_limits<double>::infinity());
    EXPECT_EQ(Rational(-big, 1).to_double(), -std::numeric_limits<double>::infinity());
}

TEST(QuadExt, Examples)
{
    const QuadExt p(1, 1);
    const QuadExt q(1, -1);
    EXPECT_EQ(p * q, QuadExt(-1, 0));
    EXPECT_EQ(QuadExt::sqrt2().inv(), QuadExt(Q("0"), Q("1/2")));
    EXPECT_EQ(QuadExt(-3, 2).sign(), -1);
    EXPECT_EQ(QuadExt(3, -2).sign(), 1);
    EXPECT_EQ(QuadExt(-3, 3).sign(), 1);
    EXPECT_EQ(QuadExt(0, 0).sign(), 0);
    EXPECT_EQ(QuadExt(0, -1).sign(), -1);
    EXPECT_EQ(QuadExt::sqrt2().to_double(), 1.4142135623730951);
    EXPECT_THROW(QuadExt(0).inv(), domain_error);
    EXPECT_THROW(QuadExt(1, 2) / QuadExt(0), domain_error);
}

TEST(QuadExt, FieldAxiomsRandomized)
{
    Rng rng(3);
    auto draw = [&] { return QuadExt(rng.rational(50, 12), rng.rational(50, 12)); };
    for (int i = 0; i < 1000; ++i) {
        const QuadExt p = draw(), q = draw(), r = draw();
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p - p, QuadExt(0));
        if (!p.is_zero()) {
            EXPECT_EQ(p * p.inv(), QuadExt(1));
            EXPECT_EQ((q / p) * p, q);
        }
    }
}

TEST(QuadExt, SignAgreesWithFloat)
{
    Rng rng(5);
    for (int i = 0; i < 5000; ++i) {
        const QuadExt p(rng.rational(2000, 50), rng.rational(2000, 50));
        const double d = p.to_double();
        if (std::abs(d) > 1e-6)
            EXPECT_EQ(p.sign(), d > 0 ? 1 : -1) << p;
        // sign(p - q) orders the field.
        const QuadExt q(rng.rational(2000, 50), rng.rational(2000, 50));
        if (std::abs(d - q.to_double()) > 1e-6)
            EXPECT_EQ((p - q).sign(), d > q.to_double() ? 1 : -1);
    }
}

TEST(QuadExt, PrintAndParse)
{
    EXPECT_EQ(QuadExt(Q("1/2"), Q("-3")).str(), "1/2 - 3*sqrt2");
    EXPECT_EQ(QuadExt(Q("0"), Q("1/2")).str(), "0 + 1/2*sqrt2");
    EXPECT_EQ(QuadExt(Q("5")).str(), "5");
    EXPECT_EQ(QuadExt::parse("1/2 - 3*sqrt2"), QuadExt(Q("1/2"), Q("-3")));
    EXPECT_EQ(QuadExt::parse("-1/2*sqrt2"), QuadExt(Q("0"), Q("-1/2")));
    EXPECT_EQ(QuadExt::parse("4"), QuadExt(4));
    EXPECT_EQ(QuadExt::parse("-1+1*sqrt2"), QuadExt(-1, 1));
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
        const QuadExt p(rng.rational(), rng.rational());
        EXPECT_EQ(QuadExt::parse(p.str()), p);
    }
    EXPECT_THROW(QuadExt::parse("1*sqrt2 + 1"), parse_error);
    EXPECT_THROW(QuadExt::parse("sqrt2"), parse_error);
    EXPECT_THROW(QuadExt::parse(""), parse_error);
}
