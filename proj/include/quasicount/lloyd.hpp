#pragma once

#include <cstddef>
#include <vector>

#include "quasicount/numtheory.hpp"
#include "quasicount/rational.hpp"

namespace quasicount {

/// Power series over Q truncated after x^order. Every operation is exact
/// through degree `order`; two operands must share the same order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  PowerSeries(std::size_t order, std::vector<Rational> coefficients);

  static PowerSeries constant(std::size_t order, const Rational& c);
  /// c * x^degree (zero when degree > order).
  static PowerSeries monomial(std::size_t order, std::size_t degree, const Rational& c = 1);

  std::size_t order() const { return coefficients_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& operator[](std::size_t i) const { return coefficients_.at(i); }

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const Rational& scalar);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  /// 1/f; requires a nonzero constant term (DomainError otherwise).
  PowerSeries reciprocal() const;

  PowerSeries pow(unsigned exponent) const;

  /// f(x^step).
  PowerSeries substitute_power(std::size_t step) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// Generating function sum_rho N(Gamma_rho, Z_p) x^rho for an odd prime p:
///   1/(p-1) * [ 1/p * ( (1-x)^-(p-1) + (p-1)(1-x)/(1-x^p) )
///               + sum_{l*l' = p-1, l != 1} phi(l) (1-x^l)^-l' ]
/// truncated after x^order. Throws DomainError unless p is an odd prime and
/// order >= 3.
PowerSeries lloyd_series(u64 p, std::size_t order);

/// Coefficient of x^rho (rho >= 3). For rho = 3 this is QC(p) when p >= 5.
Rational lloyd_coefficient(u64 p, std::size_t rho);

}  // namespace quasicount
