#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gq/errors.hpp"
#include "gq/random.hpp"
#include "gq/sections.hpp"
#include "gq/special_sets.hpp"

namespace gq {

struct IdempotentsKind {
    bool operator==(const IdempotentsKind&) const = default;
};
struct NilpotentsKind {
    bool operator==(const NilpotentsKind&) const = default;
};
struct SectionKind {
    Mat2 a;
    Rational lambda;
    bool operator==(const SectionKind&) const = default;
};
struct GeneratorLinesKind {
    Mat2 e;
    bool operator==(const GeneratorLinesKind&) const = default;
};

using SampleKind = std::variant<IdempotentsKind, NilpotentsKind, SectionKind, GeneratorLinesKind>;

inline std::string_view kind_name(const SampleKind& k)
{
    static constexpr std::array<std::string_view, 4> names{"idempotents", "nilpotents", "section", "generator_lines"};
    return names[k.index()];
}

/// Kind from its name; section and generator_lines take their parameters from the caller.
inline SampleKind make_kind(std::string_view name, const Mat2& a = Mat2::zero(), const Rational& lambda = 0,
                            const Mat2& e = Mat2::diag(1, 0))
{
    if (name == "idempotents")
        return IdempotentsKind{};
    if (name == "nilpotents")
        return NilpotentsKind{};
    if (name == "section")
        return SectionKind{a, lambda};
    if (name == "generator_lines")
        return GeneratorLinesKind{e};
    throw domain_error(Errc::unknown_kind, "unknown sample kind '" + std::string(name) + "'");
}

struct SampleOptions {
    std::size_t n = 2000;
    std::uint64_t seed = 0;
    std::optional<std::pair<double, double>> z_range; ///< Bell sweep heights; default [-3|l|-1, 3|l|+1]
    double param_range = 3.0;                          ///< half-width for chart and line parameters
};

using Vec4d = std::array<double, 4>;
using Vec3d = std::array<double, 3>;

struct SurfacePoint {
    Vec4d x;                  ///< ambient entries x1..x4
    std::optional<Vec3d> bell; ///< (X, Y, Z) when a Bell frame applies
    Vec3d chart;              ///< 3D coordinates inside the hyperplane, used by OBJ
};

struct SurfaceSample {
    std::string kind;
    std::vector<SurfacePoint> points;
    std::vector<std::pair<std::size_t, std::size_t>> segments; ///< 0-based point indices
};

namespace detail {

inline Vec4d to_d(const Mat2& m) { return {m.x1.to_double(), m.x2.to_double(), m.x3.to_double(), m.x4.to_double()}; }

/// Point of SP(I; lambda) at Bell height z and angle theta, with (X, Y, Z).
inline std::pair<Vec4d, Vec3d> bell_point(double lambda, double z, double theta)
{
    const double rho = std::sqrt(lambda * lambda / 2 + z * z);
    const double X = rho * std::cos(theta), Y = rho * std::sin(theta), Z = z;
    const double s = std::numbers::sqrt2 / 2;
    return {{lambda / 2 + s * X, s * (Y - Z), s * (Y + Z), lambda / 2 - s * X}, {X, Y, Z}};
}

inline std::pair<double, double> z_range(const SampleOptions& o, double lambda)
{
    if (o.z_range)
        return *o.z_range;
    const double w = 3 * std::fabs(lambda) + 1;
    return {-w, w};
}

inline std::pair<Vec4d, Vec3d> sweep(const SampleOptions& o, double lambda, std::size_t i)
{
    Rng rng(derive_seed(o.seed, i));
    const auto [lo, hi] = z_range(o, lambda);
    const double z = rng.uniform_real(lo, hi);
    const double theta = rng.uniform_real(0, 2 * std::numbers::pi);
    return bell_point(lambda, z, theta);
}

/// Coordinates in the default chart of P(a; lambda): the entries other than the first nonzero one of a^T.
inline Vec3d chart_coords(const Mat2& a, const Vec4d& x)
{
    const Mat2 g = transpose(a);
    std::size_t k = 0;
    while (k < 3 && g[k].is_zero())
        ++k;
    Vec3d out{};
    std::size_t slot = 0;
    for (std::size_t j = 0; j < 4; ++j)
        if (j != k)
            out[slot++] = x[j];
    return out;
}

inline Vec4d mul(const std::array<double, 4>& m, const Vec4d& x)
{
    return {m[0] * x[0] + m[1] * x[2], m[0] * x[1] + m[1] * x[3], m[2] * x[0] + m[3] * x[2],
            m[2] * x[1] + m[3] * x[3]};
}

inline Vec4d outer_d(const Rational2& u0, const Rational2& u1, double s, const Rational2& w0, const Rational2& w1,
                     double t)
{
    const double ux = u0.x.to_double() + s * u1.x.to_double(), uy = u0.y.to_double() + s * u1.y.to_double();
    const double wx = w0.x.to_double() + t * w1.x.to_double(), wy = w0.y.to_double() + t * w1.y.to_double();
    return {ux * wx, ux * wy, uy * wx, uy * wy};
}

inline void sample_section(const SectionKind& k, const SampleOptions& o, SurfaceSample& out)
{
    const Mat2& a = k.a;
    const int rk = rank(a);
    if (rk == 0) {
        if (!k.lambda.is_zero())
            return; // empty section
        for (std::size_t i = 0; i < o.n; ++i) {
            Rng rng(derive_seed(o.seed, i));
            const double s = rng.uniform_real(-o.param_range, o.param_range);
            const double t = rng.uniform_real(-o.param_range, o.param_range);
            const double phi = rng.uniform_real(0, 2 * std::numbers::pi);
            const double psi = rng.uniform_real(0, 2 * std::numbers::pi);
            const Vec4d x{s * std::cos(phi) * t * std::cos(psi), s * std::cos(phi) * t * std::sin(psi),
                          s * std::sin(phi) * t * std::cos(psi), s * std::sin(phi) * t * std::sin(psi)};
            out.points.push_back({x, std::nullopt, {x[1], x[2], x[3]}});
        }
        return;
    }
    // a = alpha I: the Bell frame of P(I; lambda / alpha) applies directly.
    if (a.x2.is_zero() && a.x3.is_zero() && a.x1 == a.x4) {
        const double l = (k.lambda / a.x1).to_double();
        for (std::size_t i = 0; i < o.n; ++i) {
            const auto [x, b] = sweep(o, l, i);
            out.points.push_back({x, b, b});
        }
        return;
    }
    if (rk == 2) {
        // SP(a; lambda) = a^-1 SP(I; lambda)
        const Vec4d ai = to_d(inverse_mat(a));
        const double l = k.lambda.to_double();
        for (std::size_t i = 0; i < o.n; ++i) {
            const Vec4d x = mul(ai, sweep(o, l, i).first);
            out.points.push_back({x, std::nullopt, chart_coords(a, x)});
        }
        return;
    }
    if (!k.lambda.is_zero()) {
        // SP(a; lambda) is the set of inverses of a / lambda.
        const InverseChart ch = inverse_chart(k.lambda.inv() * a);
        for (std::size_t i = 0; i < o.n; ++i) {
            Rng rng(derive_seed(o.seed, i));
            const double s = rng.uniform_real(-o.param_range, o.param_range);
            const double t = rng.uniform_real(-o.param_range, o.param_range);
            const Vec4d x = outer_d(ch.d0, ch.d1, s, ch.q0, ch.q1, t);
            out.points.push_back({x, std::nullopt, chart_coords(a, x)});
        }
        return;
    }
    // The two class planes through the origin; even indices on the L-plane.
    const auto planes = std::get<TwoPuncturedPlanesPlusOrigin>(classify_section(a, k.lambda));
    const PlaneBasis lp = class_plane(Side::L, planes.l_rep);
    const PlaneBasis rp = class_plane(Side::R, planes.r_rep);
    for (std::size_t i = 0; i < o.n; ++i) {
        Rng rng(derive_seed(o.seed, i));
        const PlaneBasis& p = i % 2 == 0 ? lp : rp;
        const double s = rng.uniform_real(-o.param_range, o.param_range);
        const double t = rng.uniform_real(-o.param_range, o.param_range);
        const Vec4d b1 = to_d(p.b1), b2 = to_d(p.b2);
        const Vec4d x{s * b1[0] + t * b2[0], s * b1[1] + t * b2[1], s * b1[2] + t * b2[2], s * b1[3] + t * b2[3]};
        out.points.push_back({x, std::nullopt, chart_coords(a, x)});
    }
}

inline void push_bell_point(SurfaceSample& out, const Mat2& x)
{
    const Vec4d xd = to_d(x);
    const BellPoint b = to_bell(x, trace(x));
    const Vec3d bd{b.X.to_double(), b.Y.to_double(), b.Z.to_double()};
    out.points.push_back({xd, bd, bd});
}

/// Both rulings through e and through n - 1 further seeded rank-1 idempotents, as segments.
inline void sample_lines(const GeneratorLinesKind& k, const SampleOptions& o, SurfaceSample& out)
{
    require_rank1_idempotent(k.e);
    const long width = std::max(1L, std::lround(o.param_range));
    for (std::size_t i = 0; i < o.n; ++i) {
        Mat2 f = k.e;
        if (i > 0) {
            Rng rng(derive_seed(o.seed, i));
            f = rng.idempotent_rank1();
        }
        for (Family fam : {Family::L1, Family::L2}) {
            const GeneratorLine g = generator_line(fam, f);
            // Comparable segment lengths without leaving Q.
            const long len = std::max(1L, std::lround(std::sqrt(norm_sq(g.dir).to_double())));
            const Rational scale = Rational(mpz_class(width), mpz_class(len));
            const std::size_t first = out.points.size();
            push_bell_point(out, g.at(-scale));
            push_bell_point(out, g.at(scale));
            out.segments.emplace_back(first, first + 1);
        }
    }
}

} // namespace detail

/*
 * Float point cloud of a surface. Point i draws from Rng(derive_seed(seed, i)),
 * so the output does not depend on evaluation order.
 */
inline SurfaceSample sample_surface(const SampleKind& kind, const SampleOptions& opts)
{
    SurfaceSample out{std::string(kind_name(kind)), {}, {}};
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, IdempotentsKind> || std::is_same_v<K, NilpotentsKind>) {
                const double l = std::is_same_v<K, IdempotentsKind> ? 1.0 : 0.0;
                for (std::size_t i = 0; i < opts.n; ++i) {
                    const auto [x, b] = detail::sweep(opts, l, i);
                    out.points.push_back({x, b, b});
                }
            } else if constexpr (std::is_same_v<K, SectionKind>) {
                detail::sample_section(k, opts, out);
            } else {
                detail::sample_lines(k, opts, out);
            }
        },
        kind);
    return out;
}

struct ExportStats {
    std::size_t rows = 0;
    std::size_t nonfinite = 0; ///< rows with an infinite or NaN entry
};

namespace detail {

inline std::string g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline bool finite(const SurfacePoint& p)
{
    for (double v : p.x)
        if (!std::isfinite(v))
            return false;
    return true;
}

} // namespace detail

inline ExportStats write_csv(const SurfaceSample& s, std::ostream& os)
{
    ExportStats st;
    os << "x1,x2,x3,x4,X,Y,Z\n";
    for (const auto& p : s.points) {
        os << detail::g17(p.x[0]) << ',' << detail::g17(p.x[1]) << ',' << detail::g17(p.x[2]) << ','
           << detail::g17(p.x[3]);
        for (std::size_t i = 0; i < 3; ++i) {
            os << ',';
            if (p.bell)
                os << detail::g17((*p.bell)[i]);
        }
        os << '\n';
        ++st.rows;
        st.nonfinite += detail::finite(p) ? 0 : 1;
    }
    return st;
}

inline ExportStats write_obj(const SurfaceSample& s, std::ostream& os)
{
    ExportStats st;
    os << "# " << s.kind << '\n';
    for (const auto& p : s.points) {
        os << "v " << detail::g17(p.chart[0]) << ' ' << detail::g17(p.chart[1]) << ' ' << detail::g17(p.chart[2])
           << '\n';
        ++st.rows;
        st.nonfinite += detail::finite(p) ? 0 : 1;
    }
    for (const auto& [i, j] : s.segments)
        os << "l " << i + 1 << ' ' << j + 1 << '\n';
    return st;
}

/// Ambient columns of a CSV written by write_csv.
inline std::vector<Vec4d> read_csv(std::istream& is)
{
    std::vector<Vec4d> rows;
    std::string line;
    if (!std::getline(is, line) || line.rfind("x1,x2,x3,x4", 0) != 0)
        throw parse_error("missing CSV header", 0);
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        Vec4d r{};
        for (std::size_t i = 0; i < 4; ++i) {
            std::string cell;
            if (!std::getline(ls, cell, ','))
                throw parse_error("short CSV row", rows.size() + 1);
            std::size_t used = 0;
            try {
                r[i] = std::stod(cell, &used);
            } catch (const std::exception&) {
                throw parse_error("bad CSV number '" + cell + "'", rows.size() + 1);
            }
            if (used != cell.size())
                throw parse_error("bad CSV number '" + cell + "'", rows.size() + 1);
        }
        rows.push_back(r);
    }
    return rows;
}

/// |x1 x4 - x2 x3| <= tol * max(1, |x|^2).
inline bool near_singular(const Vec4d& x, double tol = 1e-12)
{
    const double n2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    return std::fabs(x[0] * x[3] - x[1] * x[2]) <= tol * std::max(1.0, n2);
}

/// Writes through a sibling temp file and renames it over path.
inline void atomic_write(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw std::runtime_error("cannot open " + tmp.string());
        body(os);
        os.flush();
        if (!os) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace gq
