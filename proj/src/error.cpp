#include "gsslab/error.hpp"

namespace gsslab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ZeroLog: return "ZeroLog";
    case ErrorKind::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NoPartner: return "NoPartner";
    case ErrorKind::BadPeriodLength: return "BadPeriodLength";
    case ErrorKind::OddLength: return "OddLength";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace gsslab
