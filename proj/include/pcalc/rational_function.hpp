#pragma once

#include <span>

#include "pcalc/polynomial.hpp"

namespace pcalc {

/// Quotient of polynomials kept in lowest terms: gcd(num, den) is a unit and
/// the denominator's leading coefficient is 1. Equality is therefore
/// structural.
class RationalFunction {
 public:
  explicit RationalFunction(ChartPtr chart);
  RationalFunction(ChartPtr chart, const Rational& constant);
  RationalFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const ChartPtr& chart() const { return num_.chart(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  std::optional<Rational> as_constant() const;
  bool is_constant() const { return as_constant().has_value(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);
  RationalFunction scaled(const Rational& c) const;

  /// Formal partial derivative via the quotient rule.
  RationalFunction derivative(std::size_t var) const;
  /// Exact value; throws Pole when the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  RationalFunction(Polynomial n, Polynomial d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);
/// Integer power; negative exponents invert (DivisionByZero on a zero base).
RationalFunction pow(const RationalFunction& base, int exponent);

std::string to_string(const RationalFunction& f);

}  // namespace pcalc
