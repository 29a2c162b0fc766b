#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "gq/errors.hpp"
#include "gq/exact_number.hpp"

namespace gq {

/// Column or row vector of the plane.
template <class T>
struct Vec2T {
    T x{};
    T y{};

    friend bool operator==(const Vec2T&, const Vec2T&) = default;

    friend Vec2T operator+(const Vec2T& a, const Vec2T& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2T operator-(const Vec2T& a, const Vec2T& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2T operator*(const T& s, const Vec2T& v) { return {s * v.x, s * v.y}; }

    bool is_zero() const { return gq::is_zero(x) && gq::is_zero(y); }
};

template <class T>
T dot(const Vec2T<T>& a, const Vec2T<T>& b)
{
    return a.x * b.x + a.y * b.y;
}

/*
 * A 2x2 matrix [[x1, x2], [x3, x4]], entries listed row-wise. This listing is
 * the identification of M2 with 4-space used everywhere in the library.
 */
template <class T>
struct Mat2T {
    T x1{};
    T x2{};
    T x3{};
    T x4{};

    static Mat2T identity() { return {T(1), T(0), T(0), T(1)}; }
    static Mat2T zero() { return {}; }
    static Mat2T diag(T a, T d) { return {std::move(a), T(0), T(0), std::move(d)}; }

    friend bool operator==(const Mat2T&, const Mat2T&) = default;

    Mat2T operator-() const { return {-x1, -x2, -x3, -x4}; }

    friend Mat2T operator+(const Mat2T& a, const Mat2T& b)
    {
        return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3, a.x4 + b.x4};
    }
    friend Mat2T operator-(const Mat2T& a, const Mat2T& b)
    {
        return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3, a.x4 - b.x4};
    }
    /// Ordinary row-by-column product.
    friend Mat2T operator*(const Mat2T& a, const Mat2T& b)
    {
        return {a.x1 * b.x1 + a.x2 * b.x3, a.x1 * b.x2 + a.x2 * b.x4,
                a.x3 * b.x1 + a.x4 * b.x3, a.x3 * b.x2 + a.x4 * b.x4};
    }
    friend Mat2T operator*(const T& s, const Mat2T& a) { return {s * a.x1, s * a.x2, s * a.x3, s * a.x4}; }

    friend Vec2T<T> operator*(const Mat2T& a, const Vec2T<T>& v)
    {
        return {a.x1 * v.x + a.x2 * v.y, a.x3 * v.x + a.x4 * v.y};
    }

    Vec2T<T> row(int i) const { return i == 0 ? Vec2T<T>{x1, x2} : Vec2T<T>{x3, x4}; }
    Vec2T<T> col(int j) const { return j == 0 ? Vec2T<T>{x1, x3} : Vec2T<T>{x2, x4}; }

    const T& operator[](std::size_t i) const
    {
        switch (i) {
        case 0: return x1;
        case 1: return x2;
        case 2: return x3;
        default: return x4;
        }
    }
    T& operator[](std::size_t i)
    {
        return const_cast<T&>(static_cast<const Mat2T&>(*this)[i]);
    }

    bool is_zero() const { return gq::is_zero(x1) && gq::is_zero(x2) && gq::is_zero(x3) && gq::is_zero(x4); }
};

using Rational2 = Vec2T<Rational>;
using Mat2 = Mat2T<Rational>;
/// Matrices with entries in Q(sqrt2); the ambient type of Bell-frame points.
using Mat2Q2 = Mat2T<QuadExt>;

/// Row-major image of a matrix in 4-space.
using Vec4 = std::array<Rational, 4>;

inline Vec4 to_vec4(const Mat2& m) { return {m.x1, m.x2, m.x3, m.x4}; }
inline Mat2 from_vec4(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

template <class T>
Mat2T<T> transpose(const Mat2T<T>& a)
{
    return {a.x1, a.x3, a.x2, a.x4};
}

template <class T>
T trace(const Mat2T<T>& a)
{
    return a.x1 + a.x4;
}

template <class T>
T det(const Mat2T<T>& a)
{
    return a.x1 * a.x4 - a.x2 * a.x3;
}

/// Coordinate inner product of 4-space: x1 y1 + ... + x4 y4.
template <class T>
T inner(const Mat2T<T>& x, const Mat2T<T>& y)
{
    return x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3 + x.x4 * y.x4;
}

template <class T>
T norm_sq(const Mat2T<T>& x)
{
    return inner(x, x);
}

/// 0 iff a = 0, 2 iff det(a) != 0, 1 otherwise.
template <class T>
int rank(const Mat2T<T>& a)
{
    if (a.is_zero())
        return 0;
    return is_zero(det(a)) ? 1 : 2;
}

template <class T>
Mat2T<T> adjugate(const Mat2T<T>& a)
{
    return {a.x4, -a.x2, -a.x3, a.x1};
}

inline Mat2 inverse_mat(const Mat2& a)
{
    const Rational d = det(a);
    if (d.is_zero())
        throw domain_error(Errc::singular, "matrix is not invertible");
    return d.inv() * adjugate(a);
}

/// u v^T.
template <class T>
Mat2T<T> outer(const Vec2T<T>& u, const Vec2T<T>& v)
{
    return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y};
}

/// The four unit matrices E11, E12, E21, E22 in row-major order.
inline std::array<Mat2, 4> unit_matrices()
{
    return {Mat2{1, 0, 0, 0}, Mat2{0, 1, 0, 0}, Mat2{0, 0, 1, 0}, Mat2{0, 0, 0, 1}};
}

template <class T>
std::string to_string(const Mat2T<T>& m)
{
    return "[" + m.x1.str() + "," + m.x2.str() + ";" + m.x3.str() + "," + m.x4.str() + "]";
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat2T<T>& m)
{
    return os << to_string(m);
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Vec2T<T>& v)
{
    return os << "(" << v.x << "," << v.y << ")";
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

/// Parses `[a,b;c,d]` with rational entries; whitespace between tokens is ignored.
inline Mat2 parse_matrix(std::string_view text)
{
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && is_space(text[i]))
            ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw parse_error(std::string("expected '") + c + "'", i);
        ++i;
    };
    auto entry = [&] {
        skip();
        const std::size_t start = i;
        while (i < text.size() && (text[i] == '-' || text[i] == '/' || (text[i] >= '0' && text[i] <= '9')))
            ++i;
        if (i == start)
            throw parse_error("expected a rational entry", i);
        return Rational::parse(text.substr(start, i - start), start);
    };
    Mat2 m;
    expect('[');
    m.x1 = entry();
    expect(',');
    m.x2 = entry();
    expect(';');
    m.x3 = entry();
    expect(',');
    m.x4 = entry();
    expect(']');
    skip();
    if (i != text.size())
        throw parse_error("trailing characters", i);
    return m;
}

} // namespace gq
