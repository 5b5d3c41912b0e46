#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace genlogic {

using Rational = mpq_class;

// Parses "3", "-2/7", "0.125" or "1e-6" into an exact rational. Decimal
// notation is read exactly (no binary rounding). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "3/5", "1", "0".
std::string to_string(const Rational& q);

// Shortest decimal that round-trips through strtod.
std::string to_string(double x);

// Nearest double (mpq_get_d truncates instead).
double to_double(const Rational& q);

// Arithmetic-backend traits. Engine code is written once against these and
// instantiated for Rational (exact) and double (fast).
template <class Num>
struct NumTraits;

template <>
struct NumTraits<Rational> {
  static Rational from_count(std::uint64_t n) { return Rational(static_cast<unsigned long>(n)); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational ratio(std::uint64_t num, std::uint64_t den) {
    Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    r.canonicalize();
    return r;
  }
  static bool is_zero(const Rational& q) { return sgn(q) == 0; }
  static bool is_positive(const Rational& q) { return sgn(q) > 0; }
  static double to_double(const Rational& q) { return genlogic::to_double(q); }
};

template <>
struct NumTraits<double> {
  static double from_count(std::uint64_t n) { return static_cast<double>(n); }
  static double from_rational(const Rational& q) { return genlogic::to_double(q); }
  static double ratio(std::uint64_t num, std::uint64_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static bool is_zero(double x) { return x == 0.0; }
  static bool is_positive(double x) { return x > 0.0; }
  static double to_double(double x) { return x; }
};

inline std::string format_number(const Rational& q) { return to_string(q); }
inline std::string format_number(double x) { return to_string(x); }

}  // namespace genlogic
