#include "qgoppa/error.hpp"

namespace qgoppa {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NonResidue: return "NonResidue";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::SearchBoundExceeded: return "SearchBoundExceeded";
    case Errc::BothZero: return "BothZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case Errc::TableBoundExceeded: return "TableBoundExceeded";
    case Errc::NotSquareFree: return "NotSquareFree";
    case Errc::EvenDegreeModel: return "EvenDegreeModel";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::NotEnoughSplitPairs: return "NotEnoughSplitPairs";
    case Errc::EvaluationAtSupport: return "EvaluationAtSupport";
    case Errc::DuplicateAlpha: return "DuplicateAlpha";
    case Errc::RamifiedPlaceInPairs: return "RamifiedPlaceInPairs";
    case Errc::NotConjugationClosed: return "NotConjugationClosed";
    case Errc::InvalidDivisor: return "InvalidDivisor";
    case Errc::EvenExtensionDegree: return "EvenExtensionDegree";
    case Errc::NotDualContained: return "NotDualContained";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ZeroWeight: return "ZeroWeight";
    case Errc::EmptyNormalizerComplement: return "EmptyNormalizerComplement";
    case Errc::NoSelfDualBasis: return "NoSelfDualBasis";
    case Errc::NotSelfOrthogonal: return "NotSelfOrthogonal";
    case Errc::JOutOfRange: return "JOutOfRange";
    case Errc::EvenM: return "EvenM";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace qgoppa
