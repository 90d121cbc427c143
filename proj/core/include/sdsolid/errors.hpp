#pragma once

#include <stdexcept>
#include <string>

namespace sds {

/// Failure categories surfaced by the library. Each maps onto a distinct
/// precondition of some operation; the CLI translates them into exit codes.
enum class errc {
    non_prime,
    char_too_small,
    extension_too_large,
    rational_sampling_unsupported,
    field_mismatch,
    sqrt_unavailable,
    wrong_characteristic,
    bad_characteristic,
    degenerate_pair,
    degenerate_basis,
    degenerate_plane,
    not_divisible,
    identical_points,
    enumeration_too_large,
    not_singular,
    k_out_of_range,
    insufficient_smooth_points,
    point_on_line,
    no_smooth_residual_point,
    non_nodal_surface,
    no_nodal_member,
    too_many_points,
    parse_error,
    unsupported,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime: return "NonPrime";
        case errc::char_too_small: return "CharTooSmall";
        case errc::extension_too_large: return "ExtensionTooLarge";
        case errc::rational_sampling_unsupported: return "RationalSamplingUnsupported";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::sqrt_unavailable: return "SqrtUnavailable";
        case errc::wrong_characteristic: return "WrongCharacteristic";
        case errc::bad_characteristic: return "BadCharacteristic";
        case errc::degenerate_pair: return "DegeneratePair";
        case errc::degenerate_basis: return "DegenerateBasis";
        case errc::degenerate_plane: return "DegeneratePlane";
        case errc::not_divisible: return "NotDivisible";
        case errc::identical_points: return "IdenticalPoints";
        case errc::enumeration_too_large: return "EnumerationTooLarge";
        case errc::not_singular: return "NotSingular";
        case errc::k_out_of_range: return "KOutOfRange";
        case errc::insufficient_smooth_points: return "InsufficientSmoothPoints";
        case errc::point_on_line: return "PointOnLine";
        case errc::no_smooth_residual_point: return "NoSmoothResidualPoint";
        case errc::non_nodal_surface: return "NonNodalSurface";
        case errc::no_nodal_member: return "NoNodalMember";
        case errc::too_many_points: return "TooManyPoints";
        case errc::parse_error: return "ParseError";
        case errc::unsupported: return "Unsupported";
    }
    return "UnknownError";
}

}  // namespace sds
