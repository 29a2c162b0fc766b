#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gq/errors.hpp"

namespace gq {

/*
 * Exact scalars.
 *
 * Rational is a canonical p/q (gcd 1, q > 0) backed by GMP. QuadExt is
 * a + b*sqrt2 with rational a, b; since sqrt2 is irrational the
 * representation is unique, so equality is componentwise and the sign can be
 * decided from a, b alone.
 */
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I v) : q_(mpz_class(static_cast<long>(v)))
    {
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    Rational(const mpz_class& num, const mpz_class& den)
    {
        if (den == 0)
            throw domain_error(Errc::division_by_zero, "zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw domain_error(Errc::division_by_zero, "rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inv() const
    {
        if (is_zero())
            throw domain_error(Errc::division_by_zero, "inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// `p` or `p/q`.
    std::string str() const { return q_.get_str(); }

    /// Nearest double (round-to-nearest-even); saturates to +-infinity.
    double to_double() const
    {
        mpfr_t f;
        mpfr_init2(f, 53);
        mpfr_set_q(f, q_.get_mpq_t(), MPFR_RNDN);
        const double d = mpfr_get_d(f, MPFR_RNDN);
        mpfr_clear(f);
        return d;
    }

    /// Accepts `p` or `p/q` with an optional leading `-`; rejects q = 0.
    static Rational parse(std::string_view text, std::size_t offset = 0)
    {
        std::size_t i = 0;
        auto digits = [&](const char* what) {
            const std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9')
                ++i;
            if (i == start)
                throw parse_error(std::string("expected ") + what, offset + i);
            return mpz_class(std::string(text.substr(start, i - start)));
        };
        bool negative = false;
        if (i < text.size() && text[i] == '-') {
            negative = true;
            ++i;
        }
        mpz_class num = digits("digits");
        mpz_class den = 1;
        if (i < text.size() && text[i] == '/') {
            ++i;
            const std::size_t den_pos = i;
            den = digits("denominator digits");
            if (den == 0)
                throw parse_error("zero denominator", offset + den_pos);
        }
        if (i != text.size())
            throw parse_error("unexpected character", offset + i);
        if (negative)
            num = -num;
        return Rational(num, den);
    }

private:
    mpq_class q_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// a + b*sqrt2 over the rationals.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational rat) : a_(std::move(rat)) {}
    template <std::integral I>
    QuadExt(I v) : a_(v)
    {
    }
    QuadExt(Rational rat, Rational root2) : a_(std::move(rat)), b_(std::move(root2)) {}

    static QuadExt sqrt2() { return QuadExt(0, 1); }

    const Rational& rat_part() const { return a_; }
    const Rational& root2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conj() const { return QuadExt(a_, -b_); }
    /// a^2 - 2 b^2, the field norm down to Q.
    Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_); }

    QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadExt& operator*=(const QuadExt& o)
    {
        Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inv(); }

    friend QuadExt operator+(QuadExt p, const QuadExt& q) { return p += q; }
    friend QuadExt operator-(QuadExt p, const QuadExt& q) { return p -= q; }
    friend QuadExt operator*(QuadExt p, const QuadExt& q) { return p *= q; }
    friend QuadExt operator/(QuadExt p, const QuadExt& q) { return p /= q; }

    friend bool operator==(const QuadExt& p, const QuadExt& q) { return p.a_ == q.a_ && p.b_ == q.b_; }

    /// (a - b sqrt2) / (a^2 - 2 b^2).
    QuadExt inv() const
    {
        if (is_zero())
            throw domain_error(Errc::division_by_zero, "inverse of zero in Q(sqrt2)");
        const Rational n = norm();
        return QuadExt(a_ / n, -b_ / n);
    }

    int sign() const
    {
        const int sa = a_.sign();
        const int sb = b_.sign();
        if (sa >= 0 && sb >= 0)
            return (sa > 0 || sb > 0) ? 1 : 0;
        if (sa <= 0 && sb <= 0)
            return -1;
        // Opposite signs: the larger of a^2 and 2 b^2 wins.
        const auto c = a_ * a_ <=> Rational(2) * b_ * b_;
        if (c == 0)
            return 0; // unreachable for rational a, b != 0
        return (c > 0) == (sa > 0) ? 1 : -1;
    }

    /// `p + q*sqrt2` (or `p - q*sqrt2`); plain `p` when the sqrt2 part vanishes.
    std::string str() const
    {
        if (b_.is_zero())
            return a_.str();
        if (b_.sign() < 0)
            return a_.str() + " - " + (-b_).str() + "*sqrt2";
        return a_.str() + " + " + b_.str() + "*sqrt2";
    }

    double to_double() const
    {
        mpfr_t x, y;
        mpfr_init2(x, 256);
        mpfr_init2(y, 256);
        mpfr_sqrt_ui(y, 2, MPFR_RNDN);
        mpfr_mul_q(y, y, b_.mpq().get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(x, a_.mpq().get_mpq_t(), MPFR_RNDN);
        mpfr_add(x, x, y, MPFR_RNDN);
        const double d = mpfr_get_d(x, MPFR_RNDN);
        mpfr_clear(x);
        mpfr_clear(y);
        return d;
    }

    /// Accepts `p`, `q*sqrt2`, `p + q*sqrt2`, `p - q*sqrt2`; spaces are ignored.
    static QuadExt parse(std::string_view text, std::size_t offset = 0)
    {
        std::string s;
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < text.size(); ++i)
            if (text[i] != ' ' && text[i] != '\t') {
                s.push_back(text[i]);
                pos.push_back(offset + i);
            }
        if (s.empty())
            throw parse_error("empty number", offset);
        auto at = [&](std::size_t i) { return i < pos.size() ? pos[i] : offset + text.size(); };
        const std::string_view suffix = "*sqrt2";
        auto term = [&](std::size_t from, std::size_t to) -> QuadExt {
            std::string_view t(s.data() + from, to - from);
            if (t.size() >= suffix.size() && t.substr(t.size() - suffix.size()) == suffix)
                return QuadExt(0, Rational::parse(t.substr(0, t.size() - suffix.size()), at(from)));
            return QuadExt(Rational::parse(t, at(from)));
        };
        // Split at a binary +/- (one not in leading position and not after '/').
        for (std::size_t i = 1; i < s.size(); ++i) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
                QuadExt lhs = term(0, i);
                std::size_t rhs_from = i + (s[i] == '+' ? 1 : 0);
                QuadExt rhs = term(rhs_from, s.size());
                if (!lhs.is_rational() || rhs.root2_part().is_zero())
                    throw parse_error("expected p + q*sqrt2", at(i));
                return lhs + rhs;
            }
        }
        return term(0, s.size());
    }

private:
    Rational a_;
    Rational b_;
};

inline std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

inline bool is_zero(const QuadExt& q) { return q.is_zero(); }

inline double to_double(const Rational& r) { return r.to_double(); }
inline double to_double(const QuadExt& q) { return q.to_double(); }

} // namespace gq
