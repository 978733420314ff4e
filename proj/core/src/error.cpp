#include "lozi/error.hpp"

namespace lozi {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::InsufficientWord: return "InsufficientWord";
    case ErrorKind::EmptyHead: return "EmptyHead";
    case ErrorKind::WrongHead: return "WrongHead";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegenerateBounds: return "DegenerateBounds";
    case ErrorKind::NoFixedPoint: return "NoFixedPoint";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::WrongParams: return "WrongParams";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace lozi
