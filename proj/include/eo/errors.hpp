#pragma once

#include <stdexcept>
#include <string>

namespace eo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define EO_ERROR(Name)                       \
    struct Name : Error {                    \
        using Error::Error;                  \
    }

EO_ERROR(NonzeroResidue);
EO_ERROR(UnfactoredDenominator);
EO_ERROR(PoleAtBasePoint);
EO_ERROR(SingularMatrix);
EO_ERROR(DegenerateMap);
EO_ERROR(OutOfRange);
EO_ERROR(NotDivisible);
EO_ERROR(InvalidProfile);
EO_ERROR(AsymmetricResult);
EO_ERROR(OverdeterminedMismatch);
EO_ERROR(PathMismatch);
EO_ERROR(InsufficientData);
EO_ERROR(DivisionBySingularSymbol);
EO_ERROR(SizeMismatch);
EO_ERROR(IoError);
EO_ERROR(CorruptCache);
EO_ERROR(UsageError);

#undef EO_ERROR

}  // namespace eo
