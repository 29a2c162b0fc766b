#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gq {

enum class Errc {
    division_by_zero,
    singular,
    not_rank_one,
    dependent_basis,
    not_idempotent_rank1,
    degenerate_pairing,
    zero_lambda,
    not_on_hyperplane,
    zero_coefficient_matrix,
    unknown_kind,
};

inline std::string_view errc_name(Errc c)
{
    switch (c) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::singular: return "Singular";
    case Errc::not_rank_one: return "NotRankOne";
    case Errc::dependent_basis: return "DependentBasis";
    case Errc::not_idempotent_rank1: return "NotIdempotentRank1";
    case Errc::degenerate_pairing: return "DegeneratePairing";
    case Errc::zero_lambda: return "ZeroLambda";
    case Errc::not_on_hyperplane: return "NotOnHyperplane";
    case Errc::zero_coefficient_matrix: return "ZeroCoefficientMatrix";
    case Errc::unknown_kind: return "UnknownKind";
    }
    return "Unknown";
}

/// Raised when an operation's precondition on its mathematical input fails.
class domain_error : public std::runtime_error {
public:
    domain_error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Malformed text input; `position` is the 0-based character offset of the fault.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace gq
