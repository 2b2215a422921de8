#ifndef AMPCYL_RATIONAL_HPP
#define AMPCYL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "ampcyl/errors.hpp"

namespace ampcyl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// "p", "-p" or "p/q"; sign on the numerator only.
inline Rational parse_rational(std::string_view s) {
  auto digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  std::string_view p = body, q = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    p = body.substr(0, slash);
    q = body.substr(slash + 1);
  }
  if (!digits(p) || !digits(q))
    throw RationalError("malformed rational '" + std::string(s) + "'");
  BigInt n{std::string(p)}, d{std::string(q)};
  if (d == 0) throw RationalError("zero denominator in '" + std::string(s) + "'");
  Rational r(n, d);
  return neg ? Rational(-r) : r;
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace ampcyl

#endif // AMPCYL_RATIONAL_HPP
