#include "padfit/error.hpp"

#include <sstream>

namespace padfit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateConstant: return "DuplicateConstant";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::EmptyUniverse: return "EmptyUniverse";
    case ErrorCode::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorCode::UnknownConstant: return "UnknownConstant";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::EmptyChoice: return "EmptyChoice";
    case ErrorCode::SameUniverse: return "SameUniverse";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::OverlappingParts: return "OverlappingParts";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownReference: return "UnknownReference";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& detail, int line, int column) {
    std::ostringstream os;
    if (line > 0) {
        os << "line " << line << ", column " << column << ": ";
    }
    os << to_string(code);
    if (!detail.empty()) {
        os << ": " << detail;
    }
    return os.str();
}

} // namespace

Error::Error(ErrorCode code, std::string detail, int line, int column)
    : std::runtime_error(compose(code, detail, line, column)),
      code_(code),
      detail_(std::move(detail)),
      line_(line),
      column_(column) {}

Error Error::at(int line, int column) const {
    return Error(code_, detail_, line, column);
}

} // namespace padfit
