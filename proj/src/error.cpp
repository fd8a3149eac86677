#include "gpd/error.hpp"

namespace gpd
{

std::string_view to_string(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::AdjunctionFailed: return "AdjunctionFailed";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotFaceClosed: return "NotFaceClosed";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotSubcomplex: return "NotSubcomplex";
    case ErrorKind::NotSupcomplex: return "NotSupcomplex";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotFunctorial: return "NotFunctorial";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string const& detail)
    : std::runtime_error(std::string(to_string(kind)) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      detail_(detail)
{
}

bool Error::is_validation() const noexcept
{
    return kind_ != ErrorKind::Io && kind_ != ErrorKind::Internal;
}

} // namespace gpd
