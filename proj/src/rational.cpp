#include "quasicount/rational.hpp"

#include <limits>

#include "quasicount/errors.hpp"

namespace quasicount {

namespace {

std::string prefixed(std::string_view context, const std::string& msg) {
  if (context.empty()) return msg;
  return std::string(context) + ": " + msg;
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Integer to_integer(const Rational& q, std::string_view context) {
  if (!is_integral(q)) {
    throw ConsistencyError(prefixed(context, "expected an integer, got " + to_string(q)));
  }
  return boost::multiprecision::numerator(q);
}

std::uint64_t to_u64(const Integer& z, std::string_view context) {
  if (z < 0 || z > std::numeric_limits<std::uint64_t>::max()) {
    throw ConsistencyError(prefixed(context, to_string(z) + " does not fit in 64 bits"));
  }
  return static_cast<std::uint64_t>(z);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den) || den.front() == '-') {
    throw DomainError("not a rational number: '" + std::string(text) + "'");
  }
  Integer d(std::string{den});
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(Integer(std::string{num}), d);
}

Rational pow2(int e) {
  Integer p = 1;
  p <<= (e < 0 ? -e : e);
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace quasicount
