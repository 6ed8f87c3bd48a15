#include "tlie/error.hpp"

namespace tlie {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::ZeroAssignment: return "ZeroAssignment";
        case ErrorCode::UnassignedVariable: return "UnassignedVariable";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::DuplicateEntry: return "DuplicateEntry";
        case ErrorCode::InvalidGrade: return "InvalidGrade";
        case ErrorCode::MisorderedEntry: return "MisorderedEntry";
        case ErrorCode::BadTableValue: return "BadTableValue";
        case ErrorCode::NonUnitSymCoefficient: return "NonUnitSymCoefficient";
        case ErrorCode::BadDiagonal: return "BadDiagonal";
        case ErrorCode::IllegalDiagonalBracket: return "IllegalDiagonalBracket";
        case ErrorCode::UnknownIdInTable: return "UnknownIdInTable";
        case ErrorCode::TooManyVariables: return "TooManyVariables";
        case ErrorCode::WordTooShort: return "WordTooShort";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NotStable: return "NotStable";
        case ErrorCode::Inconclusive: return "Inconclusive";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::RecursionBoundExceeded: return "RecursionBoundExceeded";
        case ErrorCode::BoundsTooSmall: return "BoundsTooSmall";
        case ErrorCode::JacobiFail: return "JacobiFail";
        case ErrorCode::NotACommutationFactor: return "NotACommutationFactor";
        case ErrorCode::BadEps: return "BadEps";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownId: return "UnknownId";
        case ErrorCode::BadSpecFile: return "BadSpecFile";
        case ErrorCode::UnknownCatalogKey: return "UnknownCatalogKey";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), detail_(message) {}

}  // namespace tlie
