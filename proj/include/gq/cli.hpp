#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gq/check.hpp"
#include "gq/errors.hpp"
#include "gq/green.hpp"
#include "gq/sampling.hpp"
#include "gq/sections.hpp"
#include "gq/special_sets.hpp"

namespace gq::cli {

using Json = nlohmann::ordered_json;

struct ClassifyCmd {
    Mat2 a;
    Rational lambda;
    bool json = false;
    bool operator==(const ClassifyCmd&) const = default;
};
struct GreenCmd {
    Relation rel = Relation::L;
    Mat2 m, n;
    bool operator==(const GreenCmd&) const = default;
};
struct InversesCmd {
    Mat2 a;
    std::optional<int> grid;
    bool operator==(const InversesCmd&) const = default;
};
struct OrderCmd {
    Mat2 m, n;
    bool operator==(const OrderCmd&) const = default;
};
struct OrderReportCmd {
    Mat2 a;
    std::uint64_t trials = 200;
    std::uint64_t seed = 0;
    bool json = false;
    bool operator==(const OrderReportCmd&) const = default;
};
struct LinesCmd {
    Mat2 e;
    bool operator==(const LinesCmd&) const = default;
};
struct PlaneCmd {
    Mat2 m, n;
    bool json = false;
    bool operator==(const PlaneCmd&) const = default;
};
struct BellCmd {
    Rational lambda;
    std::optional<Mat2> point;
    std::optional<std::array<QuadExt, 3>> from;
    bool operator==(const BellCmd&) const = default;
};
struct MetricsCmd {
    Rational lambda;
    bool operator==(const MetricsCmd&) const = default;
};
struct ExportCmd {
    std::string kind;
    std::size_t samples = 2000;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out;
    std::optional<Mat2> a;
    std::optional<Rational> lambda;
    std::optional<Mat2> e;
    std::optional<double> zmin, zmax;
    bool operator==(const ExportCmd&) const = default;
};
struct CheckCmd {
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> suite;
    bool operator==(const CheckCmd&) const = default;
};

using Command = std::variant<ClassifyCmd, GreenCmd, InversesCmd, OrderCmd, OrderReportCmd, LinesCmd, PlaneCmd, BellCmd,
                             MetricsCmd, ExportCmd, CheckCmd>;

struct Invocation {
    Command cmd;
    bool float_out = false;
    bool operator==(const Invocation&) const = default;
};

/// Bad command line; maps to exit code 1.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Help was requested; carries the text to print.
struct help_request {
    std::string text;
};

enum Exit : int { ok = 0, usage = 1, domain = 2, check_failed = 3 };

inline const char* relation_name(Relation r)
{
    static constexpr const char* names[] = {"L", "R", "H", "D", "J"};
    return names[static_cast<int>(r)];
}

namespace detail {

inline Mat2 matrix_arg(const std::string& flag, const std::string& text)
{
    try {
        return parse_matrix(text);
    } catch (const parse_error& e) {
        throw usage_error(flag + ": " + e.what());
    }
}

inline Rational rational_arg(const std::string& flag, const std::string& text)
{
    try {
        return Rational::parse(text);
    } catch (const parse_error& e) {
        throw usage_error(flag + ": " + e.what());
    }
}

inline std::array<QuadExt, 3> triple_arg(const std::string& text)
{
    std::array<QuadExt, 3> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t comma = text.find(',', start);
        if ((i < 2) == (comma == std::string::npos))
            throw usage_error("--from: expected X,Y,Z");
        const std::string part = text.substr(start, i < 2 ? comma - start : std::string::npos);
        try {
            out[i] = QuadExt::parse(part);
        } catch (const parse_error& e) {
            throw usage_error(std::string("--from: ") + e.what());
        }
        start = comma + 1;
    }
    return out;
}

inline std::string quad_arg(const QuadExt& q)
{
    // Canonical argument text without spaces.
    std::string s = q.str();
    std::erase(s, ' ');
    return s;
}

} // namespace detail

/// Parses argv (without the program name).
inline Invocation parse_args(const std::vector<std::string>& args)
{
    CLI::App app{"Exact semigroup geometry of 2x2 matrices", "gq"};
    app.require_subcommand(1);
    bool float_out = false;
    app.add_flag("--float", float_out, "Print exact values as decimals");

    std::string a_s, lambda_s, m_s, n_s, e_s, rel_s, point_s, from_s, kind_s, out_s, suite_s;
    bool json = false, report = false;
    int grid = 0;
    std::uint64_t seed = 0, trials = 0;
    std::size_t samples = 2000;
    std::string format = "csv";
    double zmin = 0, zmax = 0;

    auto* classify = app.add_subcommand("classify", "Classify the section SP(a; lambda)");
    classify->add_option("--a", a_s, "Coefficient matrix [a,b;c,d]")->required();
    classify->add_option("--lambda", lambda_s, "Rational level")->required();
    classify->add_flag("--json", json);

    auto* green = app.add_subcommand("green", "Test a Green relation");
    green->add_option("--rel", rel_s)->required()->check(CLI::IsMember({"L", "R", "H", "D", "J"}));
    green->add_option("M", m_s)->required();
    green->add_option("N", n_s)->required();

    auto* inverses = app.add_subcommand("inverses", "Chart of the inverses of a rank-1 matrix");
    inverses->add_option("--a", a_s)->required();
    auto* grid_opt = inverses->add_option("--grid", grid, "Print a k x k grid of inverses")->check(CLI::Range(1, 50));

    auto* order = app.add_subcommand("order", "Natural order, or a section report with --report");
    order->add_option("M", m_s);
    order->add_option("N", n_s);
    order->add_flag("--report", report);
    order->add_option("--a", a_s);
    auto* order_trials = order->add_option("--trials", trials);
    order->add_option("--seed", seed);
    order->add_flag("--json", json);

    auto* lines = app.add_subcommand("lines", "Generator lines through a rank-1 idempotent");
    lines->add_option("--e", e_s)->required();

    auto* plane = app.add_subcommand("plane", "Is span{M, N} inside the singular matrices?");
    plane->add_option("M", m_s)->required();
    plane->add_option("N", n_s)->required();
    plane->add_flag("--json", json);

    auto* bell = app.add_subcommand("bell", "Bell coordinates on P(I; lambda)");
    bell->add_option("--lambda", lambda_s)->required();
    auto* point_opt = bell->add_option("--point", point_s);
    auto* from_opt = bell->add_option("--from", from_s);
    point_opt->excludes(from_opt);

    auto* metrics = app.add_subcommand("metrics", "Center, axis and radius of SP(I; lambda)");
    metrics->add_option("--lambda", lambda_s)->required();

    auto* exp = app.add_subcommand("export", "Sample a surface to CSV or OBJ");
    exp->add_option("--kind", kind_s)->required();
    exp->add_option("--samples", samples)->check(CLI::PositiveNumber);
    exp->add_option("--seed", seed);
    exp->add_option("--format", format)->check(CLI::IsMember({"csv", "obj"}));
    exp->add_option("--out", out_s)->required();
    auto* exp_a = exp->add_option("--a", a_s);
    auto* exp_lambda = exp->add_option("--lambda", lambda_s);
    auto* exp_e = exp->add_option("--e", e_s);
    auto* zmin_opt = exp->add_option("--zmin", zmin);
    auto* zmax_opt = exp->add_option("--zmax", zmax);

    auto* check = app.add_subcommand("check", "Run the randomized property suites");
    check->add_option("--seed", seed);
    auto* check_trials = check->add_option("--trials", trials)->check(CLI::PositiveNumber);
    auto* suite_opt = check->add_option("--suite", suite_s)->check(CLI::IsMember(suite_names()));

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        throw help_request{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw help_request{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    Invocation inv{ClassifyCmd{}, float_out};
    if (*classify) {
        inv.cmd = ClassifyCmd{detail::matrix_arg("--a", a_s), detail::rational_arg("--lambda", lambda_s), json};
    } else if (*green) {
        GreenCmd c{Relation::L, detail::matrix_arg("M", m_s), detail::matrix_arg("N", n_s)};
        c.rel = static_cast<Relation>(std::string("LRHDJ").find(rel_s));
        inv.cmd = c;
    } else if (*inverses) {
        InversesCmd c{detail::matrix_arg("--a", a_s), std::nullopt};
        if (*grid_opt)
            c.grid = grid;
        inv.cmd = c;
    } else if (*order) {
        if (report) {
            if (a_s.empty() || !m_s.empty())
                throw usage_error("order --report takes --a and no positional matrices");
            inv.cmd = OrderReportCmd{detail::matrix_arg("--a", a_s), *order_trials ? trials : 200, seed, json};
        } else {
            if (m_s.empty() || n_s.empty() || !a_s.empty() || json || *order_trials)
                throw usage_error("order takes two matrices M N (or --report --a M)");
            inv.cmd = OrderCmd{detail::matrix_arg("M", m_s), detail::matrix_arg("N", n_s)};
        }
    } else if (*lines) {
        inv.cmd = LinesCmd{detail::matrix_arg("--e", e_s)};
    } else if (*plane) {
        inv.cmd = PlaneCmd{detail::matrix_arg("M", m_s), detail::matrix_arg("N", n_s), json};
    } else if (*bell) {
        BellCmd c{detail::rational_arg("--lambda", lambda_s), std::nullopt, std::nullopt};
        if (*point_opt)
            c.point = detail::matrix_arg("--point", point_s);
        else if (*from_opt)
            c.from = detail::triple_arg(from_s);
        else
            throw usage_error("bell needs --point or --from");
        inv.cmd = c;
    } else if (*metrics) {
        inv.cmd = MetricsCmd{detail::rational_arg("--lambda", lambda_s)};
    } else if (*exp) {
        ExportCmd c;
        c.kind = kind_s;
        c.samples = samples;
        c.seed = seed;
        c.format = format;
        c.out = out_s;
        if (*exp_a)
            c.a = detail::matrix_arg("--a", a_s);
        if (*exp_lambda)
            c.lambda = detail::rational_arg("--lambda", lambda_s);
        if (*exp_e)
            c.e = detail::matrix_arg("--e", e_s);
        if (*zmin_opt)
            c.zmin = zmin;
        if (*zmax_opt)
            c.zmax = zmax;
        if (c.zmin.has_value() != c.zmax.has_value() || (c.zmin && *c.zmin >= *c.zmax))
            throw usage_error("--zmin and --zmax go together, with zmin < zmax");
        if (c.kind == "section" && !(c.a && c.lambda))
            throw usage_error("--kind section needs --a and --lambda");
        if (c.kind == "generator_lines" && !c.e)
            throw usage_error("--kind generator_lines needs --e");
        inv.cmd = c;
    } else {
        CheckCmd c{seed, std::nullopt, std::nullopt};
        if (*check_trials)
            c.trials = trials;
        if (*suite_opt)
            c.suite = suite_s;
        inv.cmd = c;
    }
    return inv;
}

namespace detail {

inline std::string g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

/// Canonical argument vector; parse_args(to_argv(i)) == i.
inline std::vector<std::string> to_argv(const Invocation& inv)
{
    std::vector<std::string> v;
    if (inv.float_out)
        v.emplace_back("--float");
    auto add = [&](std::initializer_list<std::string> items) { v.insert(v.end(), items); };
    std::visit(
        [&](const auto& c) {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, ClassifyCmd>) {
                add({"classify", "--a", to_string(c.a), "--lambda", c.lambda.str()});
                if (c.json)
                    add({"--json"});
            } else if constexpr (std::is_same_v<C, GreenCmd>) {
                add({"green", "--rel", relation_name(c.rel), to_string(c.m), to_string(c.n)});
            } else if constexpr (std::is_same_v<C, InversesCmd>) {
                add({"inverses", "--a", to_string(c.a)});
                if (c.grid)
                    add({"--grid", std::to_string(*c.grid)});
            } else if constexpr (std::is_same_v<C, OrderCmd>) {
                add({"order", to_string(c.m), to_string(c.n)});
            } else if constexpr (std::is_same_v<C, OrderReportCmd>) {
                add({"order", "--report", "--a", to_string(c.a), "--trials", std::to_string(c.trials), "--seed",
                     std::to_string(c.seed)});
                if (c.json)
                    add({"--json"});
            } else if constexpr (std::is_same_v<C, LinesCmd>) {
                add({"lines", "--e", to_string(c.e)});
            } else if constexpr (std::is_same_v<C, PlaneCmd>) {
                add({"plane", to_string(c.m), to_string(c.n)});
                if (c.json)
                    add({"--json"});
            } else if constexpr (std::is_same_v<C, BellCmd>) {
                add({"bell", "--lambda", c.lambda.str()});
                if (c.point)
                    add({"--point", to_string(*c.point)});
                if (c.from)
                    add({"--from", detail::quad_arg((*c.from)[0]) + "," + detail::quad_arg((*c.from)[1]) + "," +
                                       detail::quad_arg((*c.from)[2])});
            } else if constexpr (std::is_same_v<C, MetricsCmd>) {
                add({"metrics", "--lambda", c.lambda.str()});
            } else if constexpr (std::is_same_v<C, ExportCmd>) {
                add({"export", "--kind", c.kind, "--samples", std::to_string(c.samples), "--seed",
                     std::to_string(c.seed), "--format", c.format, "--out", c.out});
                if (c.a)
                    add({"--a", to_string(*c.a)});
                if (c.lambda)
                    add({"--lambda", c.lambda->str()});
                if (c.e)
                    add({"--e", to_string(*c.e)});
                if (c.zmin)
                    add({"--zmin", detail::g17(*c.zmin), "--zmax", detail::g17(*c.zmax)});
            } else {
                add({"check", "--seed", std::to_string(c.seed)});
                if (c.trials)
                    add({"--trials", std::to_string(*c.trials)});
                if (c.suite)
                    add({"--suite", *c.suite});
            }
        },
        inv.cmd);
    return v;
}

namespace detail {

/// Renders exact values, or their nearest doubles under --float.
struct Fmt {
    bool decimal = false;

    std::string operator()(const Rational& r) const { return decimal ? g17(r.to_double()) : r.str(); }
    std::string operator()(const QuadExt& q) const { return decimal ? g17(q.to_double()) : q.str(); }
    std::string operator()(const Mat2& m) const
    {
        if (!decimal)
            return to_string(m);
        return "[" + (*this)(m.x1) + "," + (*this)(m.x2) + ";" + (*this)(m.x3) + "," + (*this)(m.x4) + "]";
    }
    std::string operator()(const Mat2Q2& m) const
    {
        return "[" + (*this)(m.x1) + "," + (*this)(m.x2) + ";" + (*this)(m.x3) + "," + (*this)(m.x4) + "]";
    }
    std::string operator()(const Rational2& v) const { return "(" + (*this)(v.x) + ", " + (*this)(v.y) + ")"; }
    std::string operator()(const Sym3& q) const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < 3; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < 3; ++j)
                s += (j ? "," : "") + (*this)(q[i][j]);
            s += "]";
        }
        return s + "]";
    }
};

inline const char* b(bool v) { return v ? "true" : "false"; }

inline void run_classify(const ClassifyCmd& c, const Fmt& f, std::ostream& out)
{
    const SectionClass s = classify_section(c.a, c.lambda);
    const auto* planes = std::get_if<TwoPuncturedPlanesPlusOrigin>(&s);
    if (c.json) {
        Json j{{"command", "classify"}, {"a", f(c.a)}, {"lambda", f(c.lambda)}, {"class", section_name(s)}};
        const auto affine = expected_affine_class(s);
        j["affine_class"] = affine ? Json(to_string(*affine)) : Json(nullptr);
        j["l_rep"] = planes ? Json(f(planes->l_rep)) : Json(nullptr);
        j["r_rep"] = planes ? Json(f(planes->r_rep)) : Json(nullptr);
        out << j.dump() << '\n';
        return;
    }
    out << section_name(s);
    if (planes)
        out << " l_rep=" << f(planes->l_rep) << " r_rep=" << f(planes->r_rep);
    out << '\n';
}

inline void run_inverses(const InversesCmd& c, const Fmt& f, std::ostream& out)
{
    const InverseChart ch = inverse_chart(c.a);
    out << "a = " << f(ch.a) << '\n'
        << "chart (s, t) -> (d0 + s*d1)(q0 + t*q1)^T\n"
        << "d0 = " << f(ch.d0) << '\n'
        << "d1 = " << f(ch.d1) << '\n'
        << "q0 = " << f(ch.q0) << '\n'
        << "q1 = " << f(ch.q1) << '\n'
        << "pinv = " << f(pinv_rank1(c.a)) << '\n';
    if (!c.grid)
        return;
    const int k = *c.grid, lo = -(k - 1) / 2;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Rational s(lo + i), t(lo + j);
            out << "s=" << s.str() << " t=" << t.str() << " x=" << f(ch(s, t)) << '\n';
        }
}

inline Json sample_json(const OrderSample& s, const Fmt& f)
{
    return {{"x", f(s.x)}, {"le", s.le}, {"in_section", s.in_section}, {"in_inv_section", s.in_inv_section}};
}

inline void run_order_report(const OrderReportCmd& c, const Fmt& f, std::ostream& out)
{
    const OrderSectionReport r = order_section_report(c.a, c.trials, c.seed);
    if (c.json) {
        Json j{{"command", "order_report"},
               {"a", f(r.a)},
               {"seed", c.seed},
               {"trials", r.trials},
               {"le_count", r.le_count},
               {"agree_le_vs_inv_section", r.agree_le_vs_inv_section},
               {"agree_le_vs_section", r.agree_le_vs_section},
               {"counterexamples", Json::array()},
               {"literal_mismatches", Json::array()}};
        for (const auto& s : r.counterexamples)
            j["counterexamples"].push_back(sample_json(s, f));
        for (const auto& s : r.literal_mismatches)
            j["literal_mismatches"].push_back(sample_json(s, f));
        out << j.dump() << '\n';
        return;
    }
    out << "a = " << f(r.a) << '\n'
        << "trials                     " << r.trials << '\n'
        << "x <= a                     " << r.le_count << '\n'
        << "agree x<=a vs SP(a^-1;1)   " << r.agree_le_vs_inv_section << '\n'
        << "agree x<=a vs SP(a;1)      " << r.agree_le_vs_section << '\n';
    for (const auto& s : r.counterexamples)
        out << "counterexample x=" << f(s.x) << " le=" << b(s.le) << " in_inv_section=" << b(s.in_inv_section)
            << '\n';
    for (const auto& s : r.literal_mismatches)
        out << "literal_mismatch x=" << f(s.x) << " le=" << b(s.le) << " in_section=" << b(s.in_section) << '\n';
}

inline void run_lines(const LinesCmd& c, const Fmt& f, std::ostream& out)
{
    for (Family fam : {Family::L1, Family::L2}) {
        const GeneratorLine g = generator_line(fam, c.e);
        out << family_name(fam) << ": " << f(g.base) << " + t*" << f(g.dir) << '\n';
    }
}

inline void run_plane(const PlaneCmd& c, const Fmt& f, std::ostream& out)
{
    const PlaneInVariety p = classify_plane(c.m, c.n);
    std::string verdict = "NotContained";
    std::optional<Mat2> rep;
    if (const auto* l = std::get_if<LClass>(&p.verdict)) {
        verdict = "LClass";
        rep = l->rep;
    } else if (const auto* r = std::get_if<RClass>(&p.verdict)) {
        verdict = "RClass";
        rep = r->rep;
    }
    if (c.json) {
        Json j{{"command", "plane"}, {"b1", f(p.b1)}, {"b2", f(p.b2)}, {"contained", rep.has_value()},
               {"verdict", verdict}};
        j["rep"] = rep ? Json(f(*rep)) : Json(nullptr);
        out << j.dump() << '\n';
        return;
    }
    out << verdict;
    if (rep)
        out << " rep=" << f(*rep);
    out << '\n';
}

inline void run_bell(const BellCmd& c, const Fmt& f, std::ostream& out)
{
    if (c.point) {
        const BellPoint p = to_bell(*c.point, c.lambda);
        out << "X = " << f(p.X) << "\nY = " << f(p.Y) << "\nZ = " << f(p.Z) << '\n';
        return;
    }
    const auto& t = *c.from;
    out << f(from_bell(BellPoint{t[0], t[1], t[2], c.lambda})) << '\n';
}

inline void run_metrics(const MetricsCmd& c, const Fmt& f, std::ostream& out)
{
    const HyperboloidMetrics m = hyperboloid_metrics(c.lambda);
    out << "center = " << f(m.center) << "\naxis_dir = " << f(m.axis_dir) << "\nradius_sq = " << f(m.radius_sq)
        << "\nasymptotic_Q = " << f(m.asymptotic_Q) << '\n';
}

inline int run_export(const ExportCmd& c, std::ostream& out, std::ostream& err)
{
    const SampleKind kind = make_kind(c.kind, c.a.value_or(Mat2::zero()), c.lambda.value_or(Rational(0)),
                                      c.e.value_or(Mat2::diag(1, 0)));
    SampleOptions o;
    o.n = c.samples;
    o.seed = c.seed;
    if (c.zmin)
        o.z_range = std::pair{*c.zmin, *c.zmax};
    const SurfaceSample s = sample_surface(kind, o);
    ExportStats st;
    atomic_write(c.out, [&](std::ostream& os) { st = c.format == "obj" ? write_obj(s, os) : write_csv(s, os); });
    out << "wrote " << st.rows << " points";
    if (!s.segments.empty())
        out << " and " << s.segments.size() << " segments";
    out << " to " << c.out << '\n';
    if (st.nonfinite > 0)
        err << "warning: " << st.nonfinite << " points overflowed to non-finite values\n";
    return Exit::ok;
}

inline int run_check(const CheckCmd& c, std::ostream& out)
{
    const std::uint64_t trials = c.trials.value_or(default_trials());
    std::size_t passed = 0, failed = 0;
    out << "seed " << c.seed << ", " << trials << " trials per property\n";
    for (std::string_view suite : suite_names()) {
        if (c.suite && *c.suite != suite)
            continue;
        for (const auto& r : run_suite(suite, c.seed, trials)) {
            print_result(out, r);
            (r.passed() ? passed : failed) += 1;
        }
    }
    out << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? Exit::ok : Exit::check_failed;
}

} // namespace detail

inline int execute(const Invocation& inv, std::ostream& out, std::ostream& err)
{
    const detail::Fmt f{inv.float_out};
    return std::visit(
        [&](const auto& c) -> int {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, ClassifyCmd>) {
                detail::run_classify(c, f, out);
            } else if constexpr (std::is_same_v<C, GreenCmd>) {
                out << detail::b(green_eq(c.rel, c.m, c.n)) << '\n';
            } else if constexpr (std::is_same_v<C, InversesCmd>) {
                detail::run_inverses(c, f, out);
            } else if constexpr (std::is_same_v<C, OrderCmd>) {
                out << "natural_le: " << detail::b(natural_le(c.m, c.n)) << '\n'
                    << "minus_le: " << detail::b(minus_le(c.m, c.n)) << '\n';
            } else if constexpr (std::is_same_v<C, OrderReportCmd>) {
                detail::run_order_report(c, f, out);
            } else if constexpr (std::is_same_v<C, LinesCmd>) {
                detail::run_lines(c, f, out);
            } else if constexpr (std::is_same_v<C, PlaneCmd>) {
                detail::run_plane(c, f, out);
            } else if constexpr (std::is_same_v<C, BellCmd>) {
                detail::run_bell(c, f, out);
            } else if constexpr (std::is_same_v<C, MetricsCmd>) {
                detail::run_metrics(c, f, out);
            } else if constexpr (std::is_same_v<C, ExportCmd>) {
                return detail::run_export(c, out, err);
            } else {
                return detail::run_check(c, out);
            }
            return Exit::ok;
        },
        inv.cmd);
}

/// Full front end: parse, dispatch, and map failures to exit codes.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        return execute(parse_args(args), out, err);
    } catch (const help_request& h) {
        out << h.text;
        return Exit::ok;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return Exit::usage;
    } catch (const parse_error& e) {
        err << e.what() << '\n';
        return Exit::usage;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::unknown_kind ? Exit::usage : Exit::domain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return Exit::domain;
    }
}

} // namespace gq::cli
