#pragma once

#include <cstdint>
#include <random>

#include "gq/green.hpp"
#include "gq/mat2.hpp"

namespace gq {

/// SplitMix64 finalizer; derives independent per-index seeds from one seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/*
 * Seeded generator of exact test objects. Only mt19937_64 raw output is used
 * (its sequence is fixed by the standard), so draws are reproducible across
 * standard libraries.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(eng_() % span);
    }

    /// Uniform double in [lo, hi).
    double uniform_real(double lo, double hi)
    {
        const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    bool coin() { return (eng_() & 1) != 0; }

    Rational rational(std::int64_t num_box = 9, std::int64_t den_max = 6)
    {
        return Rational(mpz_class(static_cast<long>(uniform(-num_box, num_box))),
                        mpz_class(static_cast<long>(uniform(1, den_max))));
    }

    Rational nonzero_rational(std::int64_t num_box = 9, std::int64_t den_max = 6)
    {
        for (;;) {
            Rational r = rational(num_box, den_max);
            if (!r.is_zero())
                return r;
        }
    }

    /// Nonzero primitive integer vector with entries in [-box, box].
    Rational2 primitive_vec(std::int64_t box = 4)
    {
        for (;;) {
            Rational2 v{Rational(uniform(-box, box)), Rational(uniform(-box, box))};
            if (!v.is_zero())
                return ProjLine(v).vec();
        }
    }

    Mat2 mat(std::int64_t num_box = 9, std::int64_t den_max = 6)
    {
        return {rational(num_box, den_max), rational(num_box, den_max), rational(num_box, den_max),
                rational(num_box, den_max)};
    }

    /// c r^T for primitive c, r, scaled by a random nonzero rational.
    Mat2 rank1(std::int64_t box = 4)
    {
        return nonzero_rational() * outer(primitive_vec(box), primitive_vec(box));
    }

    Mat2 nonsingular()
    {
        for (;;) {
            Mat2 m = mat();
            if (!det(m).is_zero())
                return m;
        }
    }

    /// Rank 1 almost always; the zero matrix with probability 1/32.
    Mat2 singular()
    {
        if (uniform(0, 31) == 0)
            return Mat2::zero();
        return rank1();
    }

    /// u v^T / (v^T u) for random primitive u, v with nonzero pairing.
    Mat2 idempotent_rank1(std::int64_t box = 4)
    {
        for (;;) {
            const Rational2 u = primitive_vec(box);
            const Rational2 v = primitive_vec(box);
            const Rational p = dot(v, u);
            if (!p.is_zero())
                return p.inv() * outer(u, v);
        }
    }

    /// Nonzero nilpotent: s u u_perp^T.
    Mat2 nilpotent(std::int64_t box = 4)
    {
        const Rational2 u = primitive_vec(box);
        return nonzero_rational() * outer(u, Rational2{-u.y, u.x});
    }

    /// Singular matrix of trace lambda (nonzero when lambda != 0; nilpotent or 0 otherwise).
    Mat2 singular_with_trace(const Rational& lambda)
    {
        if (lambda.is_zero())
            return uniform(0, 31) == 0 ? Mat2::zero() : nilpotent();
        for (;;) {
            const Rational2 u = primitive_vec();
            const Rational2 v = primitive_vec();
            const Rational p = dot(v, u);
            if (!p.is_zero())
                return (lambda / p) * outer(u, v);
        }
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

} // namespace gq
