#ifndef ALTKIT_SCALAR_HPP
#define ALTKIT_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "altkit/error.hpp"

namespace altkit {

using Rational = mpq_class;

inline constexpr double kDefaultEps = 1e-9;

// Tolerance default: ALTKIT_EPS if set and parseable, else kDefaultEps.
inline double default_eps() {
  if (const char* env = std::getenv("ALTKIT_EPS")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
  }
  return kDefaultEps;
}

// Parses "3/2", "-7", "0.25", "1e-3", "-2.5E+2" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty number");

  if (s.find('/') != std::string::npos) {
    auto slash = s.find('/');
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    auto is_int = [](const std::string& t) {
      std::size_t p = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
      if (p == t.size()) return false;
      for (; p < t.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(t[p]))) return false;
      return true;
    };
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
      throw ParseError("malformed rational '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  // decimal: [sign] digits [. digits] [e|E [sign] digits]
  std::size_t p = 0;
  bool negative = false;
  if (s[p] == '+' || s[p] == '-') negative = s[p++] == '-';
  std::string digits;
  long frac_len = 0;
  bool seen_digit = false, seen_dot = false;
  for (; p < s.size(); ++p) {
    char c = s[p];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError("malformed number '" + s + "'");
  long exponent = 0;
  if (p < s.size()) {
    if (s[p] != 'e' && s[p] != 'E') throw ParseError("malformed number '" + s + "'");
    ++p;
    std::string ex = s.substr(p);
    if (ex.empty()) throw ParseError("malformed exponent in '" + s + "'");
    std::size_t q = (ex[0] == '+' || ex[0] == '-') ? 1 : 0;
    if (q == ex.size()) throw ParseError("malformed exponent in '" + s + "'");
    for (std::size_t t = q; t < ex.size(); ++t)
      if (!std::isdigit(static_cast<unsigned char>(ex[t])))
        throw ParseError("malformed exponent in '" + s + "'");
    if (ex.size() > 6) throw ParseError("exponent out of range in '" + s + "'");
    exponent = std::stol(ex);
  }
  exponent -= frac_len;
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational r = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

// Canonical text form: "0", "-3", "3/2".
inline std::string format_rational(Rational r) {
  r.canonicalize();
  return r.get_str();
}

// Exact square root of a nonnegative rational if it is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (sgn(r) == 0) return Rational(0);
  mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

// Uniform interface over the two scalar modes. Rational is exact (tolerances
// are ignored); double compares against an absolute tolerance.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "exact-rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x, double) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_rational(const Rational& x) { return x; }
  static Rational from_double(double x) { return Rational(x); }
  static std::optional<Rational> sqrt(const Rational& x) { return exact_sqrt(x); }
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
  static int sign(const Rational& x, double) { return sgn(x); }
  static std::string to_string(const Rational& x) { return format_rational(x); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static bool is_zero(double x, double eps) { return std::fabs(x) <= eps; }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& x) { return x.get_d(); }
  static double from_double(double x) { return x; }
  static std::optional<double> sqrt(double x) {
    if (x < 0.0) return std::nullopt;
    return std::sqrt(x);
  }
  static double magnitude(double x) { return std::fabs(x); }
  static int sign(double x, double eps) { return std::fabs(x) <= eps ? 0 : (x > 0 ? 1 : -1); }
  static std::string to_string(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  }
};

template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<To, double>) {
    return ScalarTraits<From>::to_double(x);
  } else {
    return ScalarTraits<To>::from_double(ScalarTraits<From>::to_double(x));
  }
}

}  // namespace altkit

#endif  // ALTKIT_SCALAR_HPP
