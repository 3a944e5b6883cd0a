#include "ybmap/types.hpp"

#include <cmath>

namespace ybmap {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::MalformedInput: return "malformed input";
    case ErrorKind::DegeneratePairing: return "degenerate pairing";
    case ErrorKind::NotComplementary: return "not complementary";
    case ErrorKind::ParameterCollision: return "parameter collision";
    case ErrorKind::PoleEvaluation: return "pole evaluation";
    case ErrorKind::RankMismatch: return "rank mismatch";
  }
  return "unknown";
}

bool is_precondition_violation(ErrorKind kind) noexcept {
  return kind != ErrorKind::InvalidArgument && kind != ErrorKind::MalformedInput;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Error Error::with_context(std::string_view context) const {
  // what() already carries the kind prefix; strip it before re-wrapping.
  std::string message = what();
  const std::string prefix = std::string(to_string(kind_)) + ": ";
  if (message.rfind(prefix, 0) == 0) message.erase(0, prefix.size());
  return Error(kind_, std::string(context) + message);
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool is_finite(const Matrix& m) noexcept { return m.allFinite(); }

}  // namespace ybmap
