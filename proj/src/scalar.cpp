#include "depthcut/scalar.hpp"

namespace depthcut {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::EqualHeights: return "EqualHeights";
    case ErrorCode::CutOutOfRange: return "CutOutOfRange";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::OrientationViolation: return "OrientationViolation";
    case ErrorCode::OnZeroSet: return "OnZeroSet";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::PerturbationFailed: return "PerturbationFailed";
    case ErrorCode::CyclicInput: return "CyclicInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Scalar make_scalar(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar parse_scalar(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class n, d;
  if (num.front() == '+') num.remove_prefix(1);
  n.set_str(std::string(num), 10);
  d.set_str(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_scalar(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const Scalar& value) { return sgn(value); }

}  // namespace depthcut
