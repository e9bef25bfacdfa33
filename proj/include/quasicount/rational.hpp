#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace quasicount {

using Integer = boost::multiprecision::cpp_int;

/// Exact fraction, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// num/den reduced; a negative denominator moves its sign to the numerator.
/// Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Exact conversion; throws ConsistencyError when the denominator is not 1.
/// `context` is folded into the error message.
Integer to_integer(const Rational& q, std::string_view context = {});

/// Narrowing to 64 bits; throws ConsistencyError on overflow or a negative value.
std::uint64_t to_u64(const Integer& z, std::string_view context = {});

std::string to_string(const Integer& z);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Inverse of to_string for both forms ("-3", "5/6"). Throws DomainError.
Rational parse_rational(std::string_view text);

/// 2^e for a possibly negative exponent.
Rational pow2(int e);

}  // namespace quasicount
