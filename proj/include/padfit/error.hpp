#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padfit {

enum class ErrorCode {
    DuplicateConstant,
    UniverseTooLarge,
    EmptyUniverse,
    InvalidIdentifier,
    UnknownConstant,
    UniverseMismatch,
    EmptyChoice,
    SameUniverse,
    ArityMismatch,
    InvalidEdge,
    OverlappingParts,
    SyntaxError,
    DuplicateName,
    UnknownReference,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type. Errors that
// originate in a spec file also carry a 1-based line and column; other errors
// leave both at 0.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string detail, int line = 0, int column = 0);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

    // Same error, attributed to a source position.
    Error at(int line, int column) const;

private:
    ErrorCode code_;
    std::string detail_;
    int line_;
    int column_;
};

} // namespace padfit
