#include <cilef/error.hpp>
#include <cilef/rational.hpp>

#include <cctype>

namespace cilef {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::JacobianInSocleFailure: return "JacobianInSocleFailure";
    case ErrorKind::SingularHypersurface: return "SingularHypersurface";
    case ErrorKind::TooManyVariables: return "TooManyVariables";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Error";
}

Integer factorial(unsigned long k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  const bool negative = i < text.size() && text[i] == '-';
  if (negative) ++i;
  const std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw Error(ErrorKind::ParseError, "expected digits in '" + std::string(text) + "'");
  Integer num(std::string(text.substr(num_start, i - num_start)));
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    const std::size_t den_start = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start) throw Error(ErrorKind::ParseError, "expected denominator in '" + std::string(text) + "'");
    den = Integer(std::string(text.substr(den_start, i - den_start)));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  if (i != text.size()) throw Error(ErrorKind::ParseError, "trailing characters in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace cilef
