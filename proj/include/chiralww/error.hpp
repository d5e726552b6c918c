// error.hpp: error kinds shared by the library and the command-line driver

#pragma once

#include <stdexcept>
#include <string>

namespace chiralww {

enum class ErrorKind {
    Parse,
    Schema,
    BadSweepPath,
    NonHermitianInput,
    NonFiniteValue,
    InvalidModel,
    NotCPTSymmetric,
    NotTSymmetric,
    DegenerateLevelWithoutBroadening,
    ZeroSplitting,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

// Process exit status for the CLI:
// 1 parse/schema, 2 model validation, 3 invariance precondition,
// 4 degenerate level without broadening, 5 I/O.
int exit_code(ErrorKind kind) noexcept;

}  // namespace chiralww
