//
// hsforce - Copyright 2026 The hsforce Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "hsforce/scalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <limits>
#include <string>

#include "hsforce/error.hpp"

namespace hsforce {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::kInvalidArgument:
    return "InvalidArgument";
  case ErrorCode::kDegenerateSimplex:
    return "DegenerateSimplex";
  case ErrorCode::kNotFullDimensional:
    return "NotFullDimensional";
  case ErrorCode::kInfeasibleLengths:
    return "InfeasibleLengths";
  case ErrorCode::kConcentricSpheres:
    return "ConcentricSpheres";
  case ErrorCode::kZeroRadius:
    return "ZeroRadius";
  case ErrorCode::kOutOfRange:
    return "OutOfRange";
  case ErrorCode::kUnsupported:
    return "Unsupported";
  case ErrorCode::kNoSmallLength:
    return "NoSmallLength";
  case ErrorCode::kTargetTooLarge:
    return "TargetTooLarge";
  case ErrorCode::kCollinearPoints:
    return "CollinearPoints";
  case ErrorCode::kTooManyPoints:
    return "TooManyPoints";
  case ErrorCode::kNotAdmissible:
    return "NotAdmissible";
  case ErrorCode::kPrefixTooLarge:
    return "PrefixTooLarge";
  case ErrorCode::kUnsupportedDimension:
    return "UnsupportedDimension";
  case ErrorCode::kOverflow:
    return "Overflow";
  case ErrorCode::kParse:
    return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::kExact ? "exact" : "float";
}

Mode parse_mode(std::string_view text) {
  if (text == "exact")
    return Mode::kExact;
  if (text == "float")
    return Mode::kFloat;
  throw Error(ErrorCode::kParse, "mode must be 'exact' or 'float', got '"
                                     + std::string(text) + "'");
}

std::int64_t floor_to_int(double x) {
  double f = std::floor(x);
  if (!std::isfinite(f) || f < -9.2e18 || f > 9.2e18)
    throw Error(ErrorCode::kOverflow, "floor of " + format_double(x));
  return static_cast<std::int64_t>(f);
}

std::int64_t floor_to_int(const Rational &x) {
  Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num)
    q -= 1;
  if (q > std::numeric_limits<std::int64_t>::max()
      || q < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::kOverflow, "floor of " + format_rational(x));
  return q.convert_to<std::int64_t>();
}

namespace {
  std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  }

  [[noreturn]] void bad_number(std::string_view text) {
    throw Error(ErrorCode::kParse,
                "not a rational number: '" + std::string(text) + "'");
  }

  Rational parse_decimal(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty())
      bad_number(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }

    std::string digits;
    long long exponent = 0;
    bool seen_point = false;
    std::size_t i = 0;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (seen_point)
          --exponent;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
    }
    if (digits.empty())
      bad_number(text);

    if (i < s.size()) {
      if (s[i] != 'e' && s[i] != 'E')
        bad_number(text);
      std::string_view exp_text = s.substr(i + 1);
      if (!exp_text.empty() && exp_text.front() == '+')
        exp_text.remove_prefix(1);
      long long e = 0;
      auto [ptr, ec] = std::from_chars(
          exp_text.data(), exp_text.data() + exp_text.size(), e);
      if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()
          || e > 4096 || e < -4096)
        bad_number(text);
      exponent += e;
    }

    // A leading zero would make the integer parser read octal.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Rational value{Integer(digits)};
    Rational ten_power{boost::multiprecision::pow(
        Integer(10), static_cast<unsigned>(std::llabs(exponent)))};
    if (exponent >= 0)
      value *= ten_power;
    else
      value /= ten_power;
    return negative ? Rational(-value) : value;
  }
}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos)
    return parse_decimal(s);

  Rational num = parse_decimal(s.substr(0, slash));
  Rational den = parse_decimal(s.substr(slash + 1));
  if (den == 0)
    throw Error(ErrorCode::kParse,
                "zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::string format_rational(const Rational &x) {
  const Integer den = boost::multiprecision::denominator(x);
  std::string out = boost::multiprecision::numerator(x).str();
  if (den != 1)
    out += "/" + den.str();
  return out;
}

std::string format_double(double x) {
  std::array<char, 64> buf {};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc())
    return std::to_string(x);
  return std::string(buf.data(), ptr);
}

}  // namespace hsforce
