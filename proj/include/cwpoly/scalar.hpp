#pragma once

// Scalar backends. Every geometric routine is a template over the scalar
// type; `Rational` gives exact identities, `double` is the fast path whose
// comparisons use a fixed absolute tolerance.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>

#include <boost/multiprecision/gmp.hpp>

#include "cwpoly/error.hpp"

namespace cwpoly {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

enum class Backend { rational, floating };

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Backend backend = Backend::rational;
  static constexpr const char* name = "rational";

  static int sign(const Rational& x) { return x.sign(); }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational from_rational(const Rational& x) { return x; }
  static std::string to_string(const Rational& x) { return x.str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Backend backend = Backend::floating;
  static constexpr const char* name = "float";
  static constexpr double eps = 1e-9;

  static int sign(double x) { return x > eps ? 1 : (x < -eps ? -1 : 0); }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& x) { return x.convert_to<double>(); }
  static std::string to_string(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
  }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <Scalar T>
int sign(const T& x) {
  return ScalarTraits<T>::sign(x);
}

template <Scalar T>
bool is_zero(const T& x) {
  return sign(x) == 0;
}

template <Scalar T>
bool same(const T& a, const T& b) {
  return is_zero(T(a - b));
}

template <Scalar T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

template <Scalar T>
std::string to_string(const T& x) {
  return ScalarTraits<T>::to_string(x);
}

template <Scalar T>
T abs_value(const T& x) {
  return sign(x) < 0 ? T(-x) : x;
}

template <Scalar T>
void require_finite(const T& x, const char* where) {
  if constexpr (!ScalarTraits<T>::exact) {
    if (!std::isfinite(x)) {
      throw GeometryError(ErrorKind::identity_failure,
                          std::string("non-finite value produced in ") + where);
    }
  }
}

/// Parses "p/q" or a decimal (exponent allowed) into an
/// exact rational. Decimals keep their base-10 denominator ("0.1" -> 1/10).
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return GeometryError(ErrorKind::invalid_input,
                         "cannot parse number '" + std::string(text) + "'");
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den.sign() == 0) throw fail();
    return num / den;
  }

  bool negative = false;
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw fail();
  long long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw fail();
    ++pos;
    std::string_view exp_text = text.substr(pos);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) throw fail();
    if (exponent > 4000 || exponent < -4000) throw fail();
  }
  // A leading zero would make the string constructor read octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  BigInt numerator(digits);
  long long shift = exponent - frac_digits;
  BigInt ten_pow = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
  Rational value = shift >= 0 ? Rational(numerator * ten_pow) : Rational(numerator, ten_pow);
  return negative ? Rational(-value) : value;
}

/// Exact rational equal to the shortest decimal that round-trips `x`.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) {
    throw GeometryError(ErrorKind::invalid_input, "non-finite coordinate");
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw GeometryError(ErrorKind::invalid_input, "unprintable coordinate");
  return parse_rational(std::string_view(buf, static_cast<std::size_t>(end - buf)));
}

template <Scalar T>
T scalar_from_rational(const Rational& x) {
  return ScalarTraits<T>::from_rational(x);
}

template <Scalar T>
T parse_scalar(std::string_view text) {
  return scalar_from_rational<T>(parse_rational(text));
}

}  // namespace cwpoly
