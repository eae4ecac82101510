#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gabriel {

enum class errc {
    size_cap_exceeded,
    non_monic_polynomial,
    invalid_modulus,
    ring_mismatch,
    not_prime,
    not_multiplicatively_closed,
    not_a_submodule,
    unsupported_map,
    theorem_violation,
    not_ascending,
    precondition_failed,
    tail_discipline_violation,
    parse_error,
    validation_error,
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::size_cap_exceeded: return "SizeCapExceeded";
        case errc::non_monic_polynomial: return "NonMonicPolynomial";
        case errc::invalid_modulus: return "InvalidModulus";
        case errc::ring_mismatch: return "RingMismatch";
        case errc::not_prime: return "NotPrime";
        case errc::not_multiplicatively_closed: return "NotMultiplicativelyClosed";
        case errc::not_a_submodule: return "NotASubmodule";
        case errc::unsupported_map: return "UnsupportedMap";
        case errc::theorem_violation: return "TheoremViolation";
        case errc::not_ascending: return "NotAscending";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::tail_discipline_violation: return "TailDisciplineViolation";
        case errc::parse_error: return "ParseError";
        case errc::validation_error: return "ValidationError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the `errc` kinds.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace gabriel
