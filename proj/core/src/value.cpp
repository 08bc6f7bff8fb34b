#include "fairdiv/value.hpp"

#include <cctype>
#include <ostream>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_mpz(std::string_view text, std::string_view original) {
  bool negative = false;
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_digits(digits)) {
    throw InputError("not a valid exact number: \"" + std::string(original) + "\"");
  }
  mpz_class z(std::string(digits), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Value::Value(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Value::Value(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Value Value::parse(std::string_view text) {
  if (text.empty()) throw InputError("empty numeric literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_mpz(text.substr(0, slash), text);
    mpz_class den = parse_mpz(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    mpq_class q(num, den);
    q.canonicalize();
    return Value(std::move(q));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!is_digits(frac)) {
      throw InputError("not a valid decimal literal: \"" + std::string(text) + "\"");
    }
    mpz_class whole = parse_mpz(head, text);
    bool negative = !head.empty() && head.front() == '-';
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = whole * scale + (negative ? -mpz_class(std::string(frac), 10)
                                              : mpz_class(std::string(frac), 10));
    mpq_class q(num, scale);
    q.canonicalize();
    return Value(std::move(q));
  }
  return Value(mpq_class(parse_mpz(text, text)));
}

bool Value::fits_int64() const {
  return q_.get_den() == 1 && q_.get_num().fits_slong_p();
}

std::int64_t Value::as_int64() const { return q_.get_num().get_si(); }

std::string Value::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Value& Value::operator/=(const Value& o) {
  if (o.is_zero()) throw std::logic_error("division by zero Value");
  q_ /= o.q_;
  return *this;
}

Value operator/(const Value& a, const Value& b) {
  if (b.is_zero()) throw std::logic_error("division by zero Value");
  return Value(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

}  // namespace fairdiv
