#include "tautcoh/error.hpp"

namespace tautcoh {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NegativeQuotient: return "NegativeQuotient";
    case ErrorKind::BadDegreeSupport: return "BadDegreeSupport";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::MissingSlot: return "MissingSlot";
    case ErrorKind::MissingMultTable: return "MissingMultTable";
    case ErrorKind::InvalidDims: return "InvalidDims";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ConfigParse: return "ConfigParse";
  }
  return "Unknown";
}

}  // namespace tautcoh
