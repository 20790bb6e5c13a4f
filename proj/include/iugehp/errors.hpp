#pragma once
#include <stdexcept>
#include <string>

namespace iugehp {

// Error taxonomy mirrored by the CLI exit codes:
// ConfigError -> 2, every numerical-domain failure below -> 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Radicand of a square root went negative; carries the offending value.
struct NoRealSolution : DomainError {
    double radicand;
    explicit NoRealSolution(const std::string& what_radicand, double value)
        : DomainError(what_radicand + " radicand negative: " + std::to_string(value)),
          radicand(value) {}
};

struct NoBoundStates : DomainError {
    explicit NoBoundStates(const std::string& msg) : DomainError(msg) {}
};

struct NonNormalizable : DomainError {
    explicit NonNormalizable(const std::string& msg) : DomainError(msg) {}
};

struct NotBracketed : DomainError {
    explicit NotBracketed(const std::string& msg) : DomainError(msg) {}
};

struct ConvergenceError : DomainError {
    explicit ConvergenceError(const std::string& msg) : DomainError(msg) {}
};

struct QuadratureError : DomainError {
    explicit QuadratureError(const std::string& msg) : DomainError(msg) {}
};

struct EmptySpectrum : DomainError {
    explicit EmptySpectrum(const std::string& msg) : DomainError(msg) {}
};

struct InvalidRoute : DomainError {
    explicit InvalidRoute(const std::string& msg) : DomainError(msg) {}
};

}  // namespace iugehp
