#pragma once

#include <stdexcept>
#include <string>

namespace homkernel {

/// Base class for every error raised by the library.
struct HomkernelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatches, bad axes, dangling references.
/// Distinct from an axiom failing on well-formed data.
struct StructuralError : HomkernelError {
    using HomkernelError::HomkernelError;
};

/// A map that must be bijective (twist, antipode) is singular.
struct NotInvertibleError : StructuralError {
    explicit NotInvertibleError(const std::string& what)
        : StructuralError("NotInvertible: " + what) {}
};

struct ParseError : StructuralError {
    int line = 0;
    int column = 0;
    ParseError(int line_, int column_, const std::string& what)
        : StructuralError("parse error at " + std::to_string(line_) + ":" +
                          std::to_string(column_) + ": " + what),
          line(line_), column(column_) {}
};

/// An operation's precondition failed on otherwise well-formed data.
struct PreconditionError : HomkernelError {
    using HomkernelError::HomkernelError;
};

struct BraidingNotSymmetricError : PreconditionError {
    explicit BraidingNotSymmetricError(const std::string& what)
        : PreconditionError("BraidingNotSymmetric: " + what) {}
};

struct NotInvolutiveError : PreconditionError {
    explicit NotInvolutiveError(const std::string& what)
        : PreconditionError("NotInvolutive: " + what) {}
};

struct DegreeTooSmallError : PreconditionError {
    explicit DegreeTooSmallError(const std::string& what)
        : PreconditionError("DegreeTooSmall: " + what) {}
};

struct AlphaNotIdentityError : PreconditionError {
    explicit AlphaNotIdentityError(const std::string& what)
        : PreconditionError("AlphaNotIdentity: " + what) {}
};

struct NotInvariantError : PreconditionError {
    explicit NotInvariantError(const std::string& what)
        : PreconditionError("NotInvariant: " + what) {}
};

} // namespace homkernel
