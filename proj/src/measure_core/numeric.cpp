#include "mflow/numeric.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mflow/error.hpp"

namespace mflow {

namespace mp = boost::multiprecision;

double to_double(const Rational& x) { return x.convert_to<double>(); }

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  return Rational(x);
}

Rational floor_of(const Rational& x) {
  mp::mpz_int num = mp::numerator(x);
  mp::mpz_int den = mp::denominator(x);
  mp::mpz_int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q);
}

double floor_of(double x) { return std::floor(x); }

bool is_integer(const Rational& x) { return mp::denominator(x) == 1; }
bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// mpz parsing treats a leading 0 as an octal prefix.
mp::mpz_int decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? mp::mpz_int(0) : mp::mpz_int(std::string(digits.substr(first)));
}

Rational parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  mp::mpz_int v = decimal_integer(s);
  return Rational(negative ? mp::mpz_int(-v) : v);
}

Rational pow10(long e) {
  mp::mpz_int p = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= 10;
  return e < 0 ? Rational(mp::mpz_int(1), p) : Rational(p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational p = parse_integer(text.substr(0, slash));
    Rational q = parse_integer(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return p / q;
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    Rational ex = parse_integer(text.substr(e + 1));
    exponent = mp::numerator(ex).convert_to<long>();
    text = text.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(text)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(text);
  }
  Rational value = Rational(decimal_integer(digits)) * pow10(exponent - frac_digits);
  return negative ? Rational(-value) : value;
}

std::string format_number(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

std::string format_number(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return std::to_string(x);
  return std::string(buf, end);
}

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BoundOrderViolation: return "BoundOrderViolation";
    case ErrorCode::NegativeCapacity: return "NegativeCapacity";
    case ErrorCode::NegativeMeasure: return "NegativeMeasure";
    case ErrorCode::PartitionInvalid: return "PartitionInvalid";
    case ErrorCode::NonIntegerCost: return "NonIntegerCost";
    case ErrorCode::SameEndpoints: return "SameEndpoints";
    case ErrorCode::MassMismatch: return "MassMismatch";
    case ErrorCode::NotProbability: return "NotProbability";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::NotPseudometric: return "NotPseudometric";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NegativeEpsilon: return "NegativeEpsilon";
    case ErrorCode::NotErgodicCirculation: return "NotErgodicCirculation";
    case ErrorCode::Decomposable: return "Decomposable";
    case ErrorCode::EmptyTarget: return "EmptyTarget";
    case ErrorCode::ExtractFailure: return "ExtractFailure";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DensityOutOfRange: return "DensityOutOfRange";
  }
  return "Unknown";
}

}  // namespace mflow
