#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tightgraphs {

// Exact arithmetic used by the parameter-level machinery. Graph-scale counts
// stay in long long; anything fed by formulas or user input goes through
// these so nothing silently wraps.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

inline Int rat_floor_to_int(const Rat& r) {
  if (!rat_is_integer(r)) throw std::domain_error("rational is not an integer: " + r.str());
  return rat_num(r);
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

inline long long to_ll_checked(const Int& v, const char* what = "value") {
  if (v > Int(std::numeric_limits<long long>::max()) ||
      v < Int(std::numeric_limits<long long>::min()))
    throw std::overflow_error(std::string(what) + " out of 64-bit range: " + v.str());
  return v.convert_to<long long>();
}

inline bool is_perfect_square(const Int& v, Int* root = nullptr) {
  if (v < 0) return false;
  Int r = boost::multiprecision::sqrt(v);
  if (r * r == v) {
    if (root) *root = r;
    return true;
  }
  return false;
}

// Accepts "3", "-3", or "p/q" with integer p, q.
inline Rat parse_rational(const std::string& token) {
  auto bad = [&] { return std::invalid_argument("not a rational: '" + token + "'"); };
  if (token.empty()) throw bad();
  auto slash = token.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(token));
    Int num(token.substr(0, slash));
    Int den(token.substr(slash + 1));
    if (den == 0) throw bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

}  // namespace tightgraphs
