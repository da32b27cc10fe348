#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multifold {

/// Process exit codes used by the command-line tool.
enum class ExitCode : int {
    ok = 0,
    usage = 1,
    parse = 2,
    domain = 3,
    internal = 4,
};

class Error : public std::runtime_error {
public:
    Error(const std::string& what, ExitCode code)
        : std::runtime_error(what), code_(code) {}

    ExitCode exit_code() const noexcept { return code_; }

private:
    ExitCode code_;
};

/// Malformed polynomial, rational, or document text. `position` is a
/// zero-based character offset into the offending input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position), ExitCode::parse),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Valid input that an operation cannot accept (zero polynomial, x off the
/// sheet, a degree-0 script, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what, ExitCode::domain) {}
};

/// A broken internal invariant. Never caused by user input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what, ExitCode::internal) {}
};

// Alignment-solver failures.
class NoRoot : public DomainError {
public:
    explicit NoRoot(const std::string& what) : DomainError(what) {}
};

class NotIsolated : public DomainError {
public:
    explicit NotIsolated(const std::string& what) : DomainError(what) {}
};

class EvenTouch : public DomainError {
public:
    explicit EvenTouch(const std::string& what) : DomainError(what) {}
};

}  // namespace multifold
