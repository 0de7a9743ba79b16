#include "rational.hpp"

#include <cctype>

namespace connmod {

const char *error_code_name(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::OrderMismatch: return "OrderMismatch";
  case ErrorCode::SingularLinearPart: return "SingularLinearPart";
  case ErrorCode::SymmetryViolation: return "SymmetryViolation";
  case ErrorCode::InsufficientOrder: return "InsufficientOrder";
  case ErrorCode::UnbalancedVariance: return "UnbalancedVariance";
  case ErrorCode::ResourceCap: return "ResourceCap";
  case ErrorCode::InternalMismatch: return "InternalMismatch";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string rat_to_string(const Rat &x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+'))
    i = 1;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

Int parse_int(std::string_view s) {
  if (!valid_integer(s))
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(s) + "'");
  if (s[0] == '+')
    s.remove_prefix(1);
  return Int(std::string(s), 10);
}

} // namespace

Rat rat_from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw Error(ErrorCode::ParseError, "signed denominator in '" + std::string(text) + "'");
  Int den = parse_int(den_text);
  if (den == 0)
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

} // namespace connmod
