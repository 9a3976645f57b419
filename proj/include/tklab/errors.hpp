#pragma once

// Exception hierarchy. Every named failure mode of the library is a distinct
// type so callers can catch precisely; all derive from tklab::Error.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tklab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TKLAB_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                         \
    public:                                                             \
        NAME() : Error(#NAME) {}                                        \
        explicit NAME(const std::string& what) : Error(std::string(#NAME) + ": " + what) {} \
    };

// boundary_core
TKLAB_DEFINE_ERROR(ConfigInvalid)
TKLAB_DEFINE_ERROR(AliasingOverflow)
TKLAB_DEFINE_ERROR(EvaluationTooCloseToBoundary)
TKLAB_DEFINE_ERROR(ZeroFunction)
TKLAB_DEFINE_ERROR(NotAnalytic)

// inner_functions
TKLAB_DEFINE_ERROR(ZeroOnOrOutsideDisk)
TKLAB_DEFINE_ERROR(NonpositiveMass)
TKLAB_DEFINE_ERROR(LambdaOutsideDisk)
TKLAB_DEFINE_ERROR(ThetaUnimodularAtLambda)
TKLAB_DEFINE_ERROR(NotFiniteBlaschke)

// toeplitz_engine
TKLAB_DEFINE_ERROR(SizeExceedsTruncation)
TKLAB_DEFINE_ERROR(FactorisationFailed)

// factorization
TKLAB_DEFINE_ERROR(TooManyBoundaryZeros)
TKLAB_DEFINE_ERROR(NotInKernel)
TKLAB_DEFINE_ERROR(NotMaximal)
TKLAB_DEFINE_ERROR(NotOuter)
TKLAB_DEFINE_ERROR(NonpositiveAtZero)

// conjugation_lab
TKLAB_DEFINE_ERROR(AlphaDoesNotDivideInner)

// hayashi
TKLAB_DEFINE_ERROR(IllConditionedGram)
TKLAB_DEFINE_ERROR(EvenN)
TKLAB_DEFINE_ERROR(LimitEstimationFailed)

// cli
TKLAB_DEFINE_ERROR(UnknownExperiment)

#undef TKLAB_DEFINE_ERROR

// Descriptor parse failure; carries the byte offset where parsing stopped.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t position = 0)
        : Error("ParseError at " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace tklab
