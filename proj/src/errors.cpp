#include "milnor/errors.hpp"

namespace milnor {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::syntax_error: return "SyntaxError";
    case Errc::zero_form: return "ZeroForm";
    case Errc::duplicate_hyperplane: return "DuplicateHyperplane";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::unsupported_builtin: return "UnsupportedBuiltin";
    case Errc::invalid_dimension: return "InvalidDimension";
    case Errc::genericity_failure: return "GenericityFailure";
    case Errc::section_failure: return "SectionFailure";
    case Errc::not_triple_point_arrangement: return "NotTriplePointArrangement";
    case Errc::io_error: return "IoError";
    case Errc::internal_inconsistency: return "InternalInconsistency";
    case Errc::inconsistent_spectrum: return "InconsistentSpectrum";
    case Errc::negative_sigma: return "NegativeSigma";
    case Errc::bound_violated: return "BoundViolated";
  }
  return "UnknownError";
}

bool errc_is_internal(Errc c) {
  switch (c) {
    case Errc::internal_inconsistency:
    case Errc::inconsistent_spectrum:
    case Errc::negative_sigma:
    case Errc::bound_violated:
      return true;
    default:
      return false;
  }
}

}  // namespace milnor
