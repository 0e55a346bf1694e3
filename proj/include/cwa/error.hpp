#pragma once

#include <stdexcept>
#include <string>

namespace cwa {

enum class errc {
    incompatible_mask,
    unorderable_term,
    filtration_violation,
    bad_sum,
    moment_nonzero,
    not_invariant,
    mask_mismatch,
    condition_violated,
    not_admissible,
    gluing_failure,
    forbidden_shift,
    out_of_range,
    inconsistent_family,
    non_matching_character,
    negative_degree,
    not_spherical,
    parse_error,
    bad_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::incompatible_mask: return "IncompatibleMask";
        case errc::unorderable_term: return "UnorderableTerm";
        case errc::filtration_violation: return "FiltrationViolation";
        case errc::bad_sum: return "BadSum";
        case errc::moment_nonzero: return "MomentNonzero";
        case errc::not_invariant: return "NotInvariant";
        case errc::mask_mismatch: return "MaskMismatch";
        case errc::condition_violated: return "ConditionViolated";
        case errc::not_admissible: return "NotAdmissible";
        case errc::gluing_failure: return "GluingFailure";
        case errc::forbidden_shift: return "ForbiddenShift";
        case errc::out_of_range: return "OutOfRange";
        case errc::inconsistent_family: return "InconsistentFamily";
        case errc::non_matching_character: return "NonMatchingCharacter";
        case errc::negative_degree: return "NegativeDegree";
        case errc::not_spherical: return "NotSpherical";
        case errc::parse_error: return "ParseError";
        case errc::bad_argument: return "BadArgument";
    }
    return "Error";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace cwa
