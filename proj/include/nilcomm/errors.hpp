#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilcomm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MixedFieldsError : Error {
    MixedFieldsError() : Error("operands live over different coefficient fields") {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

struct FieldMismatchError : Error {
    using Error::Error;
};

struct TooFewArgumentsError : Error {
    TooFewArgumentsError() : Error("left-normed commutator needs at least 2 arguments") {}
};

struct NotInDerivedSubalgebraError : Error {
    NotInDerivedSubalgebraError() : Error("element has a term with a nonempty generator part") {}
};

struct SupportExceededError : Error {
    using Error::Error;
};

struct DegreeTooLargeError : Error {
    using Error::Error;
};

struct NotMultilinearError : Error {
    using Error::Error;
};

struct HandleMismatchError : Error {
    using Error::Error;
};

struct ShapeViolationError : Error {
    using Error::Error;
};

struct LengthTooSmallError : Error {
    LengthTooSmallError() : Error("pure-tensor commutator needs length >= 2") {}
};

struct UnsupportedParametersError : Error {
    using Error::Error;
};

struct GeneratorMismatchError : Error {
    using Error::Error;
};

/// Parse failure; `offset` is the byte position in the input text.
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off)
        : Error(what + " at offset " + std::to_string(off)), offset(off) {}
};

struct ArityError : Error {
    using Error::Error;
};

}  // namespace nilcomm
