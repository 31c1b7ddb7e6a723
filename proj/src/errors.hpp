#pragma once

#include <stdexcept>
#include <string>

namespace mirsym {

// Error categories, mirrored 1:1 by the C API status codes.
enum class ErrorKind {
    InvalidArgument,
    Computation,
    Parse,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

#define MIRSYM_DEFINE_ERROR(NAME, KIND)                                   \
    class NAME : public Error {                                           \
    public:                                                               \
        explicit NAME(const std::string& detail)                          \
            : Error(ErrorKind::KIND, std::string(#NAME) + ": " + detail) {} \
    }

// exact_series
MIRSYM_DEFINE_ERROR(NonzeroConstantTerm, InvalidArgument);
MIRSYM_DEFINE_ERROR(ConstantTermNotOne, InvalidArgument);
MIRSYM_DEFINE_ERROR(NotInvertible, InvalidArgument);
MIRSYM_DEFINE_ERROR(LogDegreeExceeded, Computation);

// picard_fuchs
MIRSYM_DEFINE_ERROR(NotMaximallyUnipotent, InvalidArgument);
MIRSYM_DEFINE_ERROR(RecursionBreakdown, Computation);

// mirror_quintic
MIRSYM_DEFINE_ERROR(LogTermsSurvive, Computation);

// quantum_p2
MIRSYM_DEFINE_ERROR(TruncationExceeded, InvalidArgument);

// hurwitz_torus
MIRSYM_DEFINE_ERROR(BudgetExceeded, InvalidArgument);
MIRSYM_DEFINE_ERROR(UnsupportedWeight, InvalidArgument);
MIRSYM_DEFINE_ERROR(NoSolution, Computation);
MIRSYM_DEFINE_ERROR(UnderDetermined, Computation);

// ainfty
MIRSYM_DEFINE_ERROR(MaurerCartanViolated, Computation);
MIRSYM_DEFINE_ERROR(DifferentialNotSquareZero, InvalidArgument);

// fukaya_torus
MIRSYM_DEFINE_ERROR(NotTransverse, InvalidArgument);

// generic
MIRSYM_DEFINE_ERROR(ParseError, Parse);
MIRSYM_DEFINE_ERROR(InvalidArgument, InvalidArgument);
MIRSYM_DEFINE_ERROR(InternalError, Internal);

#undef MIRSYM_DEFINE_ERROR

}  // namespace mirsym
