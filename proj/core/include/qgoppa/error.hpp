#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgoppa {

enum class Errc {
  NotPrime,
  EvenCharacteristic,
  ReducibleModulus,
  DegreeMismatch,
  ZeroInput,
  NonResidue,
  FieldTooLarge,
  SearchBoundExceeded,
  BothZero,
  DimensionMismatch,
  EnumerationBoundExceeded,
  TableBoundExceeded,
  NotSquareFree,
  EvenDegreeModel,
  DegreeTooSmall,
  NotEnoughSplitPairs,
  EvaluationAtSupport,
  DuplicateAlpha,
  RamifiedPlaceInPairs,
  NotConjugationClosed,
  InvalidDivisor,
  EvenExtensionDegree,
  NotDualContained,
  LengthMismatch,
  ZeroWeight,
  EmptyNormalizerComplement,
  NoSelfDualBasis,
  NotSelfOrthogonal,
  JOutOfRange,
  EvenM,
  FieldMismatch,
  ParseError,
  OutOfRange,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qgoppa
