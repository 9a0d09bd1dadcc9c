#ifndef LRSLAB_ERRORS_HPP
#define LRSLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace lrslab {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-contract input (CLI maps these to exit code 1).
struct InputError : Error {
    using Error::Error;
};

// A stated hypothesis of an operation failed; the input is well-formed but
// the computation is refused (CLI maps these to exit code 2).
struct HypothesisError : Error {
    using Error::Error;
};

struct ZeroInputError : InputError {
    ZeroInputError() : InputError("zero input rejected") {}
    explicit ZeroInputError(const std::string& what) : InputError(what) {}
};

struct InsufficientTermsError : InputError {
    explicit InsufficientTermsError(const std::string& what) : InputError(what) {}
};

struct PoleError : HypothesisError {
    explicit PoleError(const std::string& what) : HypothesisError(what) {}
};

// Signals that the specialization point lies in the exceptional set
// (some coefficient or root value vanishes there).
struct ExceptionalPointError : HypothesisError {
    explicit ExceptionalPointError(const std::string& what) : HypothesisError(what) {}
};

struct ZeroPolynomialError : HypothesisError {
    explicit ZeroPolynomialError(const std::string& what) : HypothesisError(what) {}
};

struct HypothesisFailureError : HypothesisError {
    explicit HypothesisFailureError(const std::string& what) : HypothesisError(what) {}
};

struct NotASumError : HypothesisError {
    explicit NotASumError(const std::string& what) : HypothesisError(what) {}
};

struct CommonZeroError : HypothesisError {
    explicit CommonZeroError(const std::string& what) : HypothesisError(what) {}
};

struct VanishingSubsumError : HypothesisError {
    std::vector<int> witness;  // indices of the vanishing proper subsum
    VanishingSubsumError(const std::string& what, std::vector<int> w)
        : HypothesisError(what), witness(std::move(w)) {}
};

struct DependentInputError : HypothesisError {
    explicit DependentInputError(const std::string& what) : HypothesisError(what) {}
};

struct DegenerateInputError : HypothesisError {
    explicit DegenerateInputError(const std::string& what) : HypothesisError(what) {}
};

struct DegenerateFactorError : HypothesisError {
    explicit DegenerateFactorError(const std::string& what) : HypothesisError(what) {}
};

struct ConjugationUnavailableError : HypothesisError {
    explicit ConjugationUnavailableError(const std::string& what) : HypothesisError(what) {}
};

struct NotCyclotomicError : HypothesisError {
    explicit NotCyclotomicError(const std::string& what) : HypothesisError(what) {}
};

// Requested certified precision exceeded the hard cap (8192 bits).
struct PrecisionExceededError : Error {
    explicit PrecisionExceededError(const std::string& what) : Error(what) {}
};

}  // namespace lrslab

#endif
