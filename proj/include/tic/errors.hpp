#pragma once

#include <stdexcept>
#include <string>

namespace tic {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TIC_DEFINE_ERROR(Name)                                    \
  struct Name : Error {                                           \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

TIC_DEFINE_ERROR(NotPrime);
TIC_DEFINE_ERROR(DegreeTooLarge);
TIC_DEFINE_ERROR(DivisionByZero);
TIC_DEFINE_ERROR(CtxMismatch);
TIC_DEFINE_ERROR(EvenCharacteristic);
TIC_DEFINE_ERROR(OddCharacteristic);
TIC_DEFINE_ERROR(CharacteristicThree);
TIC_DEFINE_ERROR(QTooSmall);
TIC_DEFINE_ERROR(CoincidentPoints);
TIC_DEFINE_ERROR(MuOutOfDomain);
TIC_DEFINE_ERROR(WrongCharacteristic);
TIC_DEFINE_ERROR(UnsupportedCase);
TIC_DEFINE_ERROR(NonConstantProfile);
TIC_DEFINE_ERROR(InconsistentFlags);
TIC_DEFINE_ERROR(SingularMatrix);
TIC_DEFINE_ERROR(NotEvenSquareField);

#undef TIC_DEFINE_ERROR

}  // namespace tic
