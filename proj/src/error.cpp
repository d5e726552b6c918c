#include "chiralww/error.hpp"

namespace chiralww {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Schema: return "SchemaError";
        case ErrorKind::BadSweepPath: return "BadSweepPath";
        case ErrorKind::NonHermitianInput: return "NonHermitianInput";
        case ErrorKind::NonFiniteValue: return "NonFiniteValue";
        case ErrorKind::InvalidModel: return "InvalidModel";
        case ErrorKind::NotCPTSymmetric: return "NotCPTSymmetric";
        case ErrorKind::NotTSymmetric: return "NotTSymmetric";
        case ErrorKind::DegenerateLevelWithoutBroadening: return "DegenerateLevelWithoutBroadening";
        case ErrorKind::ZeroSplitting: return "ZeroSplitting";
        case ErrorKind::Io: return "IoError";
    }
    return "UnknownError";
}

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::Schema:
        case ErrorKind::BadSweepPath:
            return 1;
        case ErrorKind::NonHermitianInput:
        case ErrorKind::NonFiniteValue:
        case ErrorKind::InvalidModel:
            return 2;
        case ErrorKind::NotCPTSymmetric:
        case ErrorKind::NotTSymmetric:
        case ErrorKind::ZeroSplitting:
            return 3;
        case ErrorKind::DegenerateLevelWithoutBroadening:
            return 4;
        case ErrorKind::Io:
            return 5;
    }
    return 1;
}

}  // namespace chiralww
