#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srg {

enum class ErrorKind {
    MixedFields,
    DivisionByZero,
    BadLength,
    BadChar,
    UnsupportedSize,
    InfeasibleParams,
    ImprimitiveParams,
    NotPrimitiveSrg,
    NotRegular,
    IndexOutOfRange,
    CosineMismatch,
    NotHomomorphism,
    NotCoclique,
    AsymmetricInput,
    NotPartition,
    NonIntegerBound,
    MixedParameters,
    UnknownFixture,
    IoError,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BadLength: return "BadLength";
    case ErrorKind::BadChar: return "BadChar";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::InfeasibleParams: return "InfeasibleParams";
    case ErrorKind::ImprimitiveParams: return "ImprimitiveParams";
    case ErrorKind::NotPrimitiveSrg: return "NotPrimitiveSrg";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CosineMismatch: return "CosineMismatch";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotCoclique: return "NotCoclique";
    case ErrorKind::AsymmetricInput: return "AsymmetricInput";
    case ErrorKind::NotPartition: return "NotPartition";
    case ErrorKind::NonIntegerBound: return "NonIntegerBound";
    case ErrorKind::MixedParameters: return "MixedParameters";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library. The kind is stable and is what
/// callers (and the CLI exit-code mapping) dispatch on; the message is for
/// humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace srg
