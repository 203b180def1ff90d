#include "augval/value.hpp"

#include <algorithm>
#include <cctype>

#include "augval/errors.hpp"

namespace augval {

const Rational& Value::rational() const {
  if (infinite_) throw DomainError("rational() called on an infinite value");
  return finite_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  int c = cmp(a.finite_, b.finite_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Value operator+(const Value& a, const Value& b) {
  if (a.infinite_ || b.infinite_) return Value::infinity();
  return Value(Rational(a.finite_ + b.finite_));
}

Value operator-(const Value& a, const Value& b) {
  if (b.infinite_) throw DomainError("cannot subtract an infinite value");
  if (a.infinite_) return Value::infinity();
  return Value(Rational(a.finite_ - b.finite_));
}

std::string Value::str() const {
  if (infinite_) return "inf";
  return rational_str(finite_);
}

Value Value::parse(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return infinity();
  return Value(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

Value value_scale(long j, const Value& v) {
  if (j < 0) throw DomainError("negative multiplier in value_scale");
  if (v.is_infinite()) {
    if (j == 0) throw DomainError("0 * inf is not formed");
    return v;
  }
  return Value(Rational(v.rational() * j));
}

Value value_add(const Value& a, const Value& b) { return a + b; }

std::strong_ordering value_compare(const Value& a, const Value& b) { return a <=> b; }

Value value_inf(std::span<const Value> vs) {
  Value best = Value::infinity();
  for (const auto& v : vs) best = std::min(best, v);
  return best;
}

Rational parse_rational(const std::string& text) {
  auto digits_only = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char ch) { return std::isdigit(ch) != 0; });
  };
  std::string_view s(text);
  std::string_view sign;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    sign = s.substr(0, 1);
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!digits_only(num) || !digits_only(den)) {
    throw InputError("not a rational number: \"" + text + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in \"" + text + "\"");
  if (sign == "-") n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

}  // namespace augval
