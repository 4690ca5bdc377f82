#include "mpp/error.hpp"

#include <cstdlib>
#include <string>

namespace mpp {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::InvalidPoset: return "InvalidPoset";
    case ErrorKind::InvalidMarking: return "InvalidMarking";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorKind::EmptyPolytope: return "EmptyPolytope";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::InfeasibleMarking: return "InfeasibleMarking";
    case ErrorKind::PointOutsidePolytope: return "PointOutsidePolytope";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NonIntegralVertices: return "NonIntegralVertices";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ExtensionExplosion: return "ExtensionExplosion";
    case ErrorKind::WorkCapExceeded: return "WorkCapExceeded";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

std::size_t work_cap(std::size_t default_cap)
{
    const char* env = std::getenv("MPP_WORK_CAP");
    if (env == nullptr || *env == '\0')
        return default_cap;
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0)
        return default_cap;
    return static_cast<std::size_t>(value);
}

}  // namespace mpp
