#include "lcdecomp/rational.hpp"

#include "lcdecomp/error.hpp"

#include <cctype>

namespace lcdecomp {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::MixedOrientation: return "MixedOrientation";
    case ErrorCode::MixedDimension: return "MixedDimension";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::BadFactorShape: return "BadFactorShape";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ZeroOrUnitIdeal: return "ZeroOrUnitIdeal";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::NoGap: return "NoGap";
    case ErrorCode::LengthOutOfRange: return "LengthOutOfRange";
    case ErrorCode::LPInfeasible: return "LPInfeasible";
    case ErrorCode::NotPd1: return "NotPd1";
    case ErrorCode::NonzeroDroppedEntry: return "NonzeroDroppedEntry";
    case ErrorCode::NotSaCM: return "NotSaCM";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::DepthZero: return "DepthZero";
    case ErrorCode::HasDim1Submodule: return "HasDim1Submodule";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InfiniteLength: return "InfiniteLength";
    case ErrorCode::WindowTooNarrow: return "WindowTooNarrow";
    case ErrorCode::ResourceCap: return "ResourceCap";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::MixedOrientation:
    case ErrorCode::MixedDimension:
    case ErrorCode::InvalidParams:
    case ErrorCode::EmptyWindow:
    case ErrorCode::WrongShape:
    case ErrorCode::BadFactorShape:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::ZeroOrUnitIdeal:
      return 2;
    case ErrorCode::WindowTooNarrow:
    case ErrorCode::ResourceCap:
      return 4;
    default:
      return 3;
  }
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw bad();
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string display_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Integer binomial(long top, long k) {
  if (top < 0 || k < 0 || k > top) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return r;
}

int sign(const Rational& q) { return sgn(q); }

}  // namespace lcdecomp
