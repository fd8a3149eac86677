#ifndef GPD_ERROR_HPP
#define GPD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpd
{

enum class ErrorKind
{
    CycleDetected,
    UnknownElement,
    DuplicateElement,
    NotMonotone,
    AdjunctionFailed,
    AmbientMismatch,
    NotFaceClosed,
    UnknownVertex,
    NotSubcomplex,
    NotSupcomplex,
    NotNested,
    ShapeMismatch,
    NotFunctorial,
    NotNatural,
    NotSurjective,
    IndexMismatch,
    HypothesisNotMet,
    Overflow,
    InvalidField,
    Parse,
    Io,
    Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type. The message starts
/// with the kind name so that command-line output can be grepped for it.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, std::string const& detail);

    ErrorKind kind() const noexcept { return kind_; }

    std::string const& detail() const noexcept { return detail_; }

    /// Validation errors are caused by bad input; the rest by I/O or bugs.
    bool is_validation() const noexcept;

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace gpd

#endif // GPD_ERROR_HPP
