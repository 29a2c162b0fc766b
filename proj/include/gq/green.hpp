#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "gq/errors.hpp"
#include "gq/linsolve.hpp"
#include "gq/mat2.hpp"

namespace gq {

/*
 * A line through the origin of the plane, stored by a primitive integer
 * direction (gcd 1, first nonzero coordinate positive) so that equality of
 * lines is equality of representatives.
 */
class ProjLine {
public:
    ProjLine(const Rational& x, const Rational& y)
    {
        if (x.is_zero() && y.is_zero())
            throw domain_error(Errc::not_rank_one, "zero vector spans no line");
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), x.den().get_mpz_t(), y.den().get_mpz_t());
        mpz_class a = x.num() * (l / x.den());
        mpz_class b = y.num() * (l / y.den());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        a /= g;
        b /= g;
        if (a < 0 || (a == 0 && b < 0)) {
            a = -a;
            b = -b;
        }
        x_ = Rational(a, 1);
        y_ = Rational(b, 1);
    }

    explicit ProjLine(const Rational2& v) : ProjLine(v.x, v.y) {}

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    Rational2 vec() const { return {x_, y_}; }

    /// The orthogonal line.
    ProjLine perp() const { return ProjLine(-y_, x_); }

    bool contains(const Rational2& v) const { return (x_ * v.y - y_ * v.x).is_zero(); }

    friend bool operator==(const ProjLine&, const ProjLine&) = default;

    std::string str() const { return "(" + x_.str() + "," + y_.str() + ")"; }

private:
    Rational x_;
    Rational y_;
};

inline std::ostream& operator<<(std::ostream& os, const ProjLine& l) { return os << l.str(); }

inline void require_rank_one(const Mat2& a, const char* what)
{
    if (rank(a) != 1)
        throw domain_error(Errc::not_rank_one, std::string(what) + " requires a rank-1 matrix, got " + to_string(a));
}

/// Span of the nonzero rows of a rank-1 matrix.
inline ProjLine rowspace(const Mat2& a)
{
    require_rank_one(a, "rowspace");
    const Rational2 r = a.row(0);
    return ProjLine(r.is_zero() ? a.row(1) : r);
}

/// Span of the nonzero columns of a rank-1 matrix.
inline ProjLine colspace(const Mat2& a)
{
    require_rank_one(a, "colspace");
    const Rational2 c = a.col(0);
    return ProjLine(c.is_zero() ? a.col(1) : c);
}

/// a = col * row^T with `col` the primitive column-space direction.
struct RankFactor {
    Rational2 col;
    Rational2 row;
};

inline RankFactor rank_factor(const Mat2& a)
{
    const Rational2 c = colspace(a).vec();
    // Entry of c that is nonzero picks out the row of a proportional to row^T.
    const Rational2 r = !c.x.is_zero() ? (c.x.inv() * a.row(0)) : (c.y.inv() * a.row(1));
    return {c, r};
}

struct ZeroClass {
    friend bool operator==(const ZeroClass&, const ZeroClass&) = default;
};
struct RankOne {
    ProjLine rowspace;
    ProjLine colspace;
    friend bool operator==(const RankOne&, const RankOne&) = default;
};
struct Invertible {
    friend bool operator==(const Invertible&, const Invertible&) = default;
};

/// Which D-class an element lies in, with its row and column lines when rank is 1.
using GreenDescriptor = std::variant<ZeroClass, RankOne, Invertible>;

inline GreenDescriptor descriptor(const Mat2& a)
{
    switch (rank(a)) {
    case 0: return ZeroClass{};
    case 2: return Invertible{};
    default: return RankOne{rowspace(a), colspace(a)};
    }
}

enum class Relation { L, R, H, D, J };

inline bool green_eq(Relation rel, const Mat2& a, const Mat2& b)
{
    const GreenDescriptor da = descriptor(a);
    const GreenDescriptor db = descriptor(b);
    const int ra = static_cast<int>(da.index());
    const int rb = static_cast<int>(db.index());
    if (rel == Relation::D || rel == Relation::J)
        return ra == rb;
    if (ra != rb)
        return false;
    const auto* pa = std::get_if<RankOne>(&da);
    if (pa == nullptr)
        return true; // {0} and GL2 are single classes for every relation
    const auto& pb = std::get<RankOne>(db);
    switch (rel) {
    case Relation::L: return pa->rowspace == pb.rowspace;
    case Relation::R: return pa->colspace == pb.colspace;
    default: return pa->rowspace == pb.rowspace && pa->colspace == pb.colspace;
    }
}

enum class Side { L, R };

struct PlaneBasis {
    Mat2 b1;
    Mat2 b2;
    friend bool operator==(const PlaneBasis&, const PlaneBasis&) = default;
};

/*
 * Basis of the plane whose punctured form is the L-class (all matrices with
 * rows on rowspace(a)) or R-class (columns on colspace(a)) of a rank-1 a.
 */
inline PlaneBasis class_plane(Side side, const Mat2& a)
{
    require_rank_one(a, "class_plane");
    if (side == Side::L) {
        const Rational2 r = rowspace(a).vec();
        return {outer(Rational2{1, 0}, r), outer(Rational2{0, 1}, r)};
    }
    const Rational2 c = colspace(a).vec();
    return {outer(c, Rational2{1, 0}), outer(c, Rational2{0, 1})};
}

inline bool independent(const Mat2& a, const Mat2& b)
{
    RatMatrix m{RatVector(4), RatVector(4)};
    for (std::size_t i = 0; i < 4; ++i) {
        m[0][i] = a[i];
        m[1][i] = b[i];
    }
    return matrix_rank(std::move(m)) == 2;
}

/// H_a = {t a : t != 0}.
struct PuncturedLine {
    Mat2 direction;

    Mat2 at(const Rational& t) const
    {
        if (t.is_zero())
            throw domain_error(Errc::not_rank_one, "the puncture t = 0 is not on the line");
        return t * direction;
    }

    bool contains(const Mat2& x) const
    {
        return !x.is_zero() && !independent(direction, x);
    }
};

inline PuncturedLine h_class_line(const Mat2& a)
{
    require_rank_one(a, "h_class_line");
    return {a};
}

struct LClass {
    Mat2 rep;
    friend bool operator==(const LClass&, const LClass&) = default;
};
struct RClass {
    Mat2 rep;
    friend bool operator==(const RClass&, const RClass&) = default;
};
struct NotContained {
    friend bool operator==(const NotContained&, const NotContained&) = default;
};

struct PlaneInVariety {
    Mat2 b1;
    Mat2 b2;
    std::variant<LClass, RClass, NotContained> verdict;
};

/*
 * Decides whether span{b1, b2} lies in the singular matrices. det restricted to
 * the plane is the binary quadratic form
 *   det(s b1 + t b2) = s^2 det(b1) + s t P + t^2 det(b2),
 * P = det(b1 + b2) - det(b1) - det(b2), so containment is three exact checks.
 */
inline PlaneInVariety classify_plane(const Mat2& b1, const Mat2& b2)
{
    if (!independent(b1, b2))
        throw domain_error(Errc::dependent_basis, "plane basis is linearly dependent");
    const Rational polar = det(b1 + b2) - det(b1) - det(b2);
    if (!det(b1).is_zero() || !det(b2).is_zero() || !polar.is_zero())
        return {b1, b2, NotContained{}};
    // Every nonzero element has rank 1; a common row line makes it an L-plane.
    if (rowspace(b1) == rowspace(b2))
        return {b1, b2, LClass{b1}};
    if (colspace(b1) == colspace(b2))
        return {b1, b2, RClass{b1}};
    throw std::logic_error("plane inside the singular matrices with neither a common row nor column line");
}

} // namespace gq
