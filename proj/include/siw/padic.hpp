#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "siw/errors.hpp"

namespace siw {

using bigint = boost::multiprecision::cpp_int;

bigint pow_bigint(const bigint& base, long exp);
bigint mod_inverse(const bigint& a, const bigint& modulus);

// Valuation value: a half-integer (denominator 1 or 2) or +infinity.
// Half-integers arise for elements of the ramified quadratic extension.
class Val {
 public:
  constexpr Val() : twice_(0), inf_(false) {}
  static constexpr Val of_int(long long v) { return Val(2 * v, false); }
  static constexpr Val of_halves(long long twice) { return Val(twice, false); }
  static constexpr Val infinity() { return Val(0, true); }

  bool is_infinity() const { return inf_; }
  bool is_integral() const { return inf_ || twice_ % 2 == 0; }
  long long twice() const { return twice_; }
  long long floor_int() const;
  long long ceil_int() const;
  double to_double() const;
  std::string to_string() const;  // "a" or "a/2"
  static Val parse(const std::string& s);

  Val operator+(Val o) const;
  Val operator-(Val o) const;
  Val operator*(long long k) const;
  Val operator-() const { return inf_ ? *this : Val(-twice_, false); }

  bool operator==(const Val& o) const = default;
  bool operator<(Val o) const;
  bool operator<=(Val o) const { return *this == o || *this < o; }
  bool operator>(Val o) const { return o < *this; }
  bool operator>=(Val o) const { return o <= *this; }

 private:
  constexpr Val(long long twice, bool inf) : twice_(twice), inf_(inf) {}
  long long twice_;
  bool inf_;
};

inline Val min(Val a, Val b) { return a < b ? a : b; }
inline Val max(Val a, Val b) { return a < b ? b : a; }

// An element of Q_p carried at explicit absolute precision: either exactly
// zero, indistinguishable from zero below p^prec, or p^val * mantissa with the
// mantissa a unit residue modulo p^(prec-val). Absolute precision means the
// element is pinned modulo p^prec. All operations propagate precision
// monotonically; none ever claims more than the inputs support.
class PadicNumber {
 public:
  enum class State { ExactZero, ZeroAtPrecision, Unit };

  PadicNumber() : p_(0), state_(State::ExactZero), val_(0), prec_(0) {}

  static PadicNumber exact_zero(long p);
  static PadicNumber zero_at(long p, long prec);
  static PadicNumber from_int(long p, const bigint& value, long prec);
  static PadicNumber from_parts(long p, long val, const bigint& mantissa, long prec);

  long prime() const { return p_; }
  State state() const { return state_; }
  bool is_exact_zero() const { return state_ == State::ExactZero; }
  bool is_zero_at_precision() const { return state_ != State::Unit; }
  long prec() const { return prec_; }

  // Integer valuation of a unit-state value. Throws IndistinguishableFromZero
  // for a value that is zero at working precision (the bound is prec()).
  long val_int() const;
  Val valuation() const;           // infinity for the exact zero
  const bigint& mantissa() const { return mant_; }

  // Residue of the element modulo p^k (requires k <= prec, val >= 0).
  bigint residue(long k) const;

  PadicNumber operator+(const PadicNumber& o) const;
  PadicNumber operator-(const PadicNumber& o) const;
  PadicNumber operator-() const;
  PadicNumber operator*(const PadicNumber& o) const;
  PadicNumber operator/(const PadicNumber& o) const;
  PadicNumber inverse() const;
  PadicNumber pow(long e) const;

  PadicNumber mul_int(const bigint& k) const;
  // Exact division by p^k (valuation shift; no precision gained).
  PadicNumber shift(long k) const;
  // Forget knowledge beyond p^k.
  PadicNumber truncated(long k) const;

  bool congruent(const PadicNumber& o, long k) const;  // a = b mod p^k
  bool identical(const PadicNumber& o) const;          // same stored triple

  std::string to_string() const;  // debug-friendly "p^v * m (mod p^prec)"

 private:
  static PadicNumber normalized(long p, long val, bigint mant, long prec);

  long p_;
  State state_;
  long val_;     // integer valuation (Unit state)
  bigint mant_;  // unit residue, 0 < mant < p^(prec-val)
  long prec_;    // absolute precision exponent (Unit and ZeroAtPrecision)
};

}  // namespace siw
