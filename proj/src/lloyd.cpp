#include "quasicount/lloyd.hpp"

#include "quasicount/errors.hpp"

namespace quasicount {

PowerSeries::PowerSeries(std::size_t order) : coefficients_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::size_t order, std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1, Rational(0));
}

PowerSeries PowerSeries::constant(std::size_t order, const Rational& c) { return monomial(order, 0, c); }

PowerSeries PowerSeries::monomial(std::size_t order, std::size_t degree, const Rational& c) {
  PowerSeries s(order);
  if (degree <= order) s.coefficients_[degree] = c;
  return s;
}

namespace {

void require_same_order(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) throw DomainError("power series of different truncation order");
}

}  // namespace

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  require_same_order(*this, other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return out;
}

PowerSeries PowerSeries::reciprocal() const {
  if (coefficients_[0] == 0) throw DomainError("reciprocal of a series with zero constant term");
  const std::size_t n = order();
  PowerSeries inv(n);
  inv.coefficients_[0] = 1 / coefficients_[0];
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coefficients_[j] * inv.coefficients_[k - j];
    inv.coefficients_[k] = -acc * inv.coefficients_[0];
  }
  return inv;
}

PowerSeries PowerSeries::pow(unsigned exponent) const {
  PowerSeries result = constant(order(), 1);
  PowerSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::substitute_power(std::size_t step) const {
  if (step == 0) throw DomainError("substitute_power: step must be positive");
  const std::size_t n = order();
  PowerSeries out(n);
  for (std::size_t i = 0; i * step <= n; ++i) out.coefficients_[i * step] = coefficients_[i];
  return out;
}

PowerSeries lloyd_series(u64 p, std::size_t order) {
  if (p < 3 || !is_prime(p)) throw DomainError("lloyd_series: p must be an odd prime");
  if (order < 3) throw DomainError("lloyd_series: order must be at least 3");

  const PowerSeries one = PowerSeries::constant(order, 1);
  const PowerSeries one_minus_x = one - PowerSeries::monomial(order, 1);
  // (1 - x)^-1, reused for every (1 - x^l)^-l' by substitution.
  const PowerSeries geometric = one_minus_x.reciprocal();

  PowerSeries inner = geometric.pow(static_cast<unsigned>(p - 1));
  const PowerSeries one_minus_xp = one - PowerSeries::monomial(order, p);
  inner += Rational(Integer(p - 1)) * (one_minus_x * one_minus_xp.reciprocal());
  inner *= Rational(Integer(1), Integer(p));

  for (u64 l : divisors(p - 1)) {
    if (l == 1) continue;
    const u64 l_dual = (p - 1) / l;
    inner += Rational(Integer(euler_phi(l))) *
             geometric.pow(static_cast<unsigned>(l_dual)).substitute_power(static_cast<std::size_t>(l));
  }
  inner *= Rational(Integer(1), Integer(p - 1));
  return inner;
}

Rational lloyd_coefficient(u64 p, std::size_t rho) {
  if (rho < 3) throw DomainError("lloyd_coefficient: rho must be at least 3");
  return lloyd_series(p, rho)[rho];
}

}  // namespace quasicount
