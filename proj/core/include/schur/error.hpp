#ifndef SCHUR_ERROR_HPP
#define SCHUR_ERROR_HPP

#include <stdexcept>

namespace schur {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The caller broke an operation's contract (bad argument, unsorted input,
/// index out of range). Signals a bug at the call site, not bad data.
struct ContractViolation : Error {
    using Error::Error;
};

/// A certificate object (coloring file, clique, witness) failed validation.
struct MalformedCertificate : Error {
    using Error::Error;
};

/// A configured work budget was exhausted: node/step limits, wall clock,
/// variable caps. Callers must treat this as "no answer", never as UNSAT.
struct ResourceError : Error {
    using Error::Error;
};

/// Textual input (DIMACS, JSON, CLI spec string) could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

/// An external solver produced output outside the agreed protocol.
struct SolverProtocolError : Error {
    using Error::Error;
};

/// The process environment is unusable (missing executable, bad scratch dir).
struct EnvironmentError : Error {
    using Error::Error;
};

/// A decoded model contradicts what the encoding guarantees. Indicates an
/// encoder or solver defect; never a user error.
struct EncodingSoundnessError : Error {
    using Error::Error;
};

} // namespace schur

#endif
