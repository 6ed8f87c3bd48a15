#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tlie {

enum class ErrorCode {
    NotAUnit,
    ZeroAssignment,
    UnassignedVariable,
    DuplicateId,
    DuplicateEntry,
    InvalidGrade,
    MisorderedEntry,
    BadTableValue,
    NonUnitSymCoefficient,
    BadDiagonal,
    IllegalDiagonalBracket,
    UnknownIdInTable,
    TooManyVariables,
    WordTooShort,
    NotClosed,
    NotStable,
    Inconclusive,
    PreconditionViolated,
    RecursionBoundExceeded,
    BoundsTooSmall,
    JacobiFail,
    NotACommutationFactor,
    BadEps,
    SyntaxError,
    UnknownId,
    BadSpecFile,
    UnknownCatalogKey,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }
    // Message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace tlie
