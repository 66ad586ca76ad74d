#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "hk/errors.hpp"

namespace hk {

// Exact rational scalar. Thin value wrapper over mpq_class that keeps results
// canonical and keeps GMP expression templates out of client code: every
// operation materialises a canonical mpq before anyone can call get_str().
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int n) : q_(n) {}
  Rat(long n) : q_(n) {}
  Rat(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Exact value of the double (binary expansion), not a decimal approximation.
  static Rat from_double(double x) {
    mpq_class q(x);
    q.canonicalize();
    return Rat(q);
  }

  // Accepts "n", "n/d", and plain decimals like "-0.25" (exact, base 10).
  static Rat parse(std::string_view s);

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) { return wrap(a.q_ + b.q_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return wrap(a.q_ - b.q_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return wrap(a.q_ * b.q_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    return wrap(a.q_ / b.q_);
  }
  Rat operator-() const { return wrap(-q_); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

 private:
  static Rat wrap(const mpq_class& q) {
    Rat r;
    r.q_ = q;  // mpq arithmetic on canonical operands stays canonical
    return r;
  }
  template <class E>
  static Rat wrap(const __gmp_expr<mpq_t, E>& e) {
    Rat r;
    r.q_ = e;
    return r;
  }
  mpq_class q_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

inline Rat Rat::parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::string text(s);
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return Rat(q);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
    return Rat(q);
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (frac_len == 0 || digits.empty() || digits == "-" || digits == "+")
    throw ParseError("bad decimal literal: " + text);
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw ParseError("bad decimal literal: " + text);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  mpq_class q(num, den);
  q.canonicalize();
  return Rat(q);
}

}  // namespace hk
