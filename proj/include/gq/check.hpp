#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gq/green.hpp"
#include "gq/random.hpp"
#include "gq/sections.hpp"
#include "gq/special_sets.hpp"

namespace gq {

/// One randomized invariant: holds(rng) is evaluated once per trial.
struct Property {
    std::string name;
    std::function<bool(Rng&)> holds;
};

struct PropertyResult {
    std::string suite;
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::optional<std::uint64_t> first_failure; ///< trial index

    bool passed() const { return failures == 0; }
};

inline constexpr std::uint64_t kBuiltinTrials = 200;

/// GQ_DEFAULT_TRIALS when set to a positive integer, else the builtin default.
inline std::uint64_t default_trials()
{
    if (const char* env = std::getenv("GQ_DEFAULT_TRIALS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return kBuiltinTrials;
}

namespace detail {

inline std::vector<Property> exact_suite()
{
    return {
        {"field_axioms",
         [](Rng& r) {
             const Rational a = r.rational(), b = r.rational(), c = r.nonzero_rational();
             return (a + b) * c == a * c + b * c && (a * b) * c == a * (b * c) && (a / c) * c == a &&
                    c * c.inv() == Rational(1) && a - a == Rational(0);
         }},
        {"print_parse_round_trip",
         [](Rng& r) {
             const Rational a = r.rational(1000000, 997);
             return Rational::parse(a.str()) == a;
         }},
        {"quadext_inverse",
         [](Rng& r) {
             const QuadExt x(r.rational(), r.nonzero_rational());
             return x * x.inv() == QuadExt(1) && x.norm() == (x * x.conj()).rat_part();
         }},
        {"quadext_sign_matches_float",
         [](Rng& r) {
             const QuadExt x(r.rational(), r.rational());
             const double d = x.to_double();
             return x.sign() == (d > 0) - (d < 0);
         }},
        {"nearest_double",
         [](Rng& r) {
             const auto p = r.uniform(-1000000, 1000000), q = r.uniform(1, 1000000);
             return Rational(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q))).to_double() ==
                    static_cast<double>(p) / static_cast<double>(q);
         }},
    };
}

inline std::vector<Property> core_suite()
{
    return {
        {"cayley_hamilton",
         [](Rng& r) {
             const Mat2 x = r.mat();
             return (x * x - trace(x) * x + det(x) * Mat2::identity()).is_zero();
         }},
        {"det_multiplicative",
         [](Rng& r) {
             const Mat2 x = r.mat(), y = r.mat();
             return det(x * y) == det(x) * det(y);
         }},
        {"inner_is_trace_form",
         [](Rng& r) {
             const Mat2 x = r.mat(), y = r.mat();
             return inner(x, y) == trace(transpose(x) * y);
         }},
        {"inverse",
         [](Rng& r) {
             const Mat2 x = r.nonsingular();
             const Mat2 xi = inverse_mat(x);
             return x * xi == Mat2::identity() && xi * x == Mat2::identity();
         }},
        {"rank_classes",
         [](Rng& r) {
             const Mat2 x = r.coin() ? r.mat(2, 1) : r.singular();
             const int k = rank(x);
             return (k == 0) == x.is_zero() && (k == 2) == !det(x).is_zero();
         }},
        {"parse_round_trip",
         [](Rng& r) {
             const Mat2 x = r.mat(1000, 97);
             return parse_matrix(to_string(x)) == x;
         }},
    };
}

inline std::vector<Property> green_suite()
{
    return {
        {"d_is_equal_rank",
         [](Rng& r) {
             const Mat2 a = r.coin() ? r.singular() : r.mat(2, 1);
             const Mat2 b = r.coin() ? r.singular() : r.mat(2, 1);
             return green_eq(Relation::D, a, b) == (rank(a) == rank(b)) &&
                    green_eq(Relation::J, a, b) == green_eq(Relation::D, a, b) &&
                    green_eq(Relation::H, a, b) ==
                        (green_eq(Relation::L, a, b) && green_eq(Relation::R, a, b));
         }},
        {"class_planes_are_classes",
         [](Rng& r) {
             const Mat2 a = r.rank1();
             const PlaneBasis l = class_plane(Side::L, a), p = class_plane(Side::R, a);
             const Rational s = r.nonzero_rational(), t = r.rational();
             return green_eq(Relation::L, s * l.b1 + t * l.b2, a) && green_eq(Relation::R, s * p.b1 + t * p.b2, a);
         }},
        {"h_class_is_punctured_line",
         [](Rng& r) {
             const Mat2 a = r.rank1();
             const PuncturedLine h = h_class_line(a);
             const Mat2 x = r.coin() ? r.rank1(2) : r.nonzero_rational() * a;
             return green_eq(Relation::H, x, a) == h.contains(x);
         }},
        {"plane_converse_round_trip",
         [](Rng& r) {
             const Mat2 a = r.rank1();
             const Side side = r.coin() ? Side::L : Side::R;
             const PlaneBasis p = class_plane(side, a);
             const Mat2 g = r.nonsingular();
             const auto v = classify_plane(g.x1 * p.b1 + g.x2 * p.b2, g.x3 * p.b1 + g.x4 * p.b2);
             if (side == Side::L)
                 return std::holds_alternative<LClass>(v.verdict) &&
                        green_eq(Relation::L, std::get<LClass>(v.verdict).rep, a);
             return std::holds_alternative<RClass>(v.verdict) &&
                    green_eq(Relation::R, std::get<RClass>(v.verdict).rep, a);
         }},
    };
}

inline std::vector<Property> sets_suite()
{
    return {
        {"rank1_idempotent_characterization",
         [](Rng& r) {
             const Mat2 x = r.coin() ? r.idempotent_rank1() : r.mat(2, 2);
             return is_rank1_idempotent(x) == (trace(x) == Rational(1) && det(x).is_zero());
         }},
        {"nilpotent_characterization",
         [](Rng& r) {
             const Mat2 x = r.coin() ? r.nilpotent() : r.mat(2, 2);
             return is_nilpotent(x) == (trace(x).is_zero() && det(x).is_zero());
         }},
        {"nilpotent_cone_identity",
         [](Rng& r) {
             const Mat2 x = r.nilpotent();
             const Rational d = x.x2 - x.x3;
             return d * d == norm_sq(x);
         }},
        {"chart_points_are_inverses",
         [](Rng& r) {
             const Mat2 a = r.rank1();
             const Mat2 x = chart_eval(inverse_chart(a), r.rational(), r.rational());
             return is_inverse_pair(a, x) && inverse_membership(a, x);
         }},
        {"generator_lines_in_classes",
         [](Rng& r) {
             const Mat2 e = r.idempotent_rank1();
             const Rational t = r.rational();
             const Mat2 p1 = generator_line(Family::L1, e).at(t), p2 = generator_line(Family::L2, e).at(t);
             return is_rank1_idempotent(p1) && is_rank1_idempotent(p2) && green_eq(Relation::L, p1, e) &&
                    green_eq(Relation::R, p2, e);
         }},
        {"natural_order_is_minus_order",
         [](Rng& r) {
             const Mat2 x = r.coin() ? r.singular() : r.mat(1, 1);
             const Mat2 y = r.coin() ? r.mat(2, 1) : x + r.singular();
             return natural_le(x, y) == minus_le(x, y);
         }},
    };
}

inline std::vector<Property> sections_suite()
{
    return {
        {"bell_residual_iff_singular",
         [](Rng& r) {
             const Mat2 x = r.coin() ? r.singular() : r.mat();
             return bell_residual(x).is_zero() == det(x).is_zero();
         }},
        {"bell_round_trip",
         [](Rng& r) {
             const Mat2 x = r.mat();
             const Mat2Q2 y = from_bell(to_bell(x, trace(x)));
             return y == Mat2Q2{QuadExt(x.x1), QuadExt(x.x2), QuadExt(x.x3), QuadExt(x.x4)};
         }},
        {"restriction_identity",
         [](Rng& r) {
             const Hyperplane h{r.coin() ? r.rank1() : r.nonsingular(), r.rational()};
             const auto q = restrict_quadric(h);
             const RVec3 t{r.rational(), r.rational(), r.rational()};
             return det(q.chart.point(t)) == q.eval(t);
         }},
        {"classifier_agreement",
         [](Rng& r) {
             const Mat2 a = r.coin() ? r.rank1() : r.nonsingular();
             const Rational l = r.coin() ? Rational(0) : r.nonzero_rational();
             return expected_affine_class(classify_section(a, l)) == section_affine_class(a, l);
         }},
        {"inverse_image_law",
         [](Rng& r) {
             const Mat2 a = r.nonsingular();
             const Mat2 x = r.coin() ? inverse_mat(a) * r.idempotent_rank1() : r.singular();
             return section_membership({a, 1}, x) == is_rank1_idempotent(a * x);
         }},
    };
}

} // namespace detail

inline const std::vector<std::string_view>& suite_names()
{
    static const std::vector<std::string_view> names{"exact", "core", "green", "sets", "sections"};
    return names;
}

/// Properties of a named suite, or an empty list for an unknown name.
inline std::vector<Property> suite_properties(std::string_view suite)
{
    if (suite == "exact")
        return detail::exact_suite();
    if (suite == "core")
        return detail::core_suite();
    if (suite == "green")
        return detail::green_suite();
    if (suite == "sets")
        return detail::sets_suite();
    if (suite == "sections")
        return detail::sections_suite();
    return {};
}

/*
 * Trial i of property p in suite s draws from
 * Rng(derive_seed(derive_seed(seed, s * 64 + p), i)), so results do not depend
 * on which suites run or in what order.
 */
inline std::vector<PropertyResult> run_suite(std::string_view suite, std::uint64_t seed, std::uint64_t trials)
{
    std::uint64_t s_index = 0;
    while (s_index < suite_names().size() && suite_names()[s_index] != suite)
        ++s_index;
    std::vector<PropertyResult> out;
    const auto props = suite_properties(suite);
    for (std::uint64_t p = 0; p < props.size(); ++p) {
        PropertyResult res{std::string(suite), props[p].name, trials, 0, std::nullopt};
        const std::uint64_t pseed = derive_seed(seed, s_index * 64 + p);
        for (std::uint64_t i = 0; i < trials; ++i) {
            Rng rng(derive_seed(pseed, i));
            bool ok = false;
            try {
                ok = props[p].holds(rng);
            } catch (const std::exception&) {
                ok = false;
            }
            if (!ok) {
                ++res.failures;
                if (!res.first_failure)
                    res.first_failure = i;
            }
        }
        out.push_back(std::move(res));
    }
    return out;
}

inline void print_result(std::ostream& os, const PropertyResult& r)
{
    os << (r.passed() ? "PASS " : "FAIL ") << r.suite << '.' << r.name << ' ' << (r.trials - r.failures) << '/'
       << r.trials;
    if (r.first_failure)
        os << " first_failure=" << *r.first_failure;
    os << '\n';
}

} // namespace gq
