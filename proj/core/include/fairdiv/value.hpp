#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fairdiv {

/// Exact rational scalar backed by an arbitrary-precision fraction.
///
/// Every bundle value, weighted utility, gamma factor and tie-break in the
/// toolkit is computed and compared in exact arithmetic; no decision path
/// touches floating point. Instances of Value are always canonical
/// (coprime numerator/denominator, positive denominator).
class Value {
 public:
  Value() : q_(0) {}
  Value(int n) : q_(n) {}              // NOLINT(google-explicit-constructor)
  Value(long n) : q_(n) {}             // NOLINT(google-explicit-constructor)
  Value(long long n) : q_(static_cast<long>(n)) {}  // NOLINT
  Value(long num, long den);

  explicit Value(mpq_class q);

  /// Parses "42", "-3", "12.75" or "51/4". Throws InputError otherwise.
  static Value parse(std::string_view text);

  bool is_negative() const { return sgn(q_) < 0; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_positive() const { return sgn(q_) > 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// True when the value is an integer representable as int64.
  bool fits_int64() const;
  std::int64_t as_int64() const;  // valid only when fits_int64()

  /// Canonical text form: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  const mpq_class& raw() const { return q_; }

  Value operator-() const { return Value(mpq_class(-q_)); }
  Value& operator+=(const Value& o) { q_ += o.q_; return *this; }
  Value& operator-=(const Value& o) { q_ -= o.q_; return *this; }
  Value& operator*=(const Value& o) { q_ *= o.q_; return *this; }
  Value& operator/=(const Value& o);

  friend Value operator+(const Value& a, const Value& b) { return Value(mpq_class(a.q_ + b.q_)); }
  friend Value operator-(const Value& a, const Value& b) { return Value(mpq_class(a.q_ - b.q_)); }
  friend Value operator*(const Value& a, const Value& b) { return Value(mpq_class(a.q_ * b.q_)); }
  friend Value operator/(const Value& a, const Value& b);

  friend bool operator==(const Value& a, const Value& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Value& a, const Value& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Value& a, const Value& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Value& a, const Value& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Value& a, const Value& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Value& a, const Value& b) { return cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Value& v);

 private:
  mpq_class q_;
};

}  // namespace fairdiv
