#pragma once

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

#include "hk/rational.hpp"

// Helpers that let the step-function machinery be written once for both
// arithmetics (hk::Rat and double). Mixing the two inside one computation is a
// compile error by construction: everything is templated on the scalar type.
namespace hk::scalar {

template <class S>
inline S from_ratio(long num, long den);
template <>
inline Rat from_ratio<Rat>(long num, long den) {
  return Rat(num, den);
}
template <>
inline double from_ratio<double>(long num, long den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

template <class S>
inline S from_double(double x);
template <>
inline Rat from_double<Rat>(double x) {
  return Rat::from_double(x);
}
template <>
inline double from_double<double>(double x) {
  return x;
}

inline double to_double(double x) { return x; }
inline double to_double(const Rat& r) { return r.to_double(); }

// Shortest round-trip formatting for doubles; 'num/den' for rationals.
inline std::string str(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}
inline std::string str(const Rat& r) { return r.str(); }

template <class S>
inline S parse(std::string_view text);
template <>
inline Rat parse<Rat>(std::string_view text) {
  return Rat::parse(text);
}
template <>
inline double parse<double>(std::string_view text) {
  std::string t(text);
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0') throw ParseError("bad numeric literal: " + t);
  return v;
}

inline double abs_of(double x) { return std::fabs(x); }
inline Rat abs_of(const Rat& r) { return hk::abs(r); }

template <class S>
inline S half(const S& x) {
  return x / from_ratio<S>(2, 1);
}

}  // namespace hk::scalar
