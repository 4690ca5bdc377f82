#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mpp {

enum class ErrorKind {
    UnknownElement,
    InvalidPoset,
    InvalidMarking,
    InvalidArgument,
    UnboundedPolytope,
    EmptyPolytope,
    DimensionTooLarge,
    InfeasibleMarking,
    PointOutsidePolytope,
    PreconditionViolated,
    NonIntegralVertices,
    VerificationFailed,
    ExtensionExplosion,
    WorkCapExceeded,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto a stable exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Enumeration cap: `default_cap` unless MPP_WORK_CAP is set to a positive integer.
std::size_t work_cap(std::size_t default_cap);

}  // namespace mpp
