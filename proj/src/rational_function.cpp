#include "pcalc/rational_function.hpp"

#include <algorithm>

#include "pcalc/error.hpp"

namespace pcalc {

RationalFunction::RationalFunction(ChartPtr chart)
    : num_(chart), den_(chart, 1) {}

RationalFunction::RationalFunction(ChartPtr chart, const Rational& constant)
    : num_(chart, constant), den_(chart, 1) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(num_.chart(), 1) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_chart(num_.chart(), den_.chart());
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(num_.chart(), 1);
    return;
  }
  if (auto c = den_.as_constant()) {
    if (*c != 1) num_ = num_.scaled(1 / *c);
    den_ = Polynomial(num_.chart(), 1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

std::optional<Rational> RationalFunction::as_constant() const {
  if (!den_.is_constant()) return std::nullopt;
  return num_.as_constant();
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Reduced{}}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  require_same_chart(chart(), other.chart());
  if (is_polynomial() && other.is_polynomial()) {
    num_ += other.num_;
    return *this;
  }
  if (den_ == other.den_) {
    num_ += other.num_;
    normalize();
    return *this;
  }
  num_ = num_ * other.den_ + other.num_ * den_;
  den_ = den_ * other.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  require_same_chart(chart(), other.chart());
  if (is_polynomial() && other.is_polynomial()) {
    num_ = num_ * other.num_;
    if (num_.is_zero()) den_ = Polynomial(chart(), 1);
    return *this;
  }
  num_ = num_ * other.num_;
  den_ = den_ * other.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  require_same_chart(chart(), other.chart());
  if (other.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero function");
  num_ = num_ * other.den_;
  den_ = den_ * other.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
  if (sgn(c) == 0) return RationalFunction(chart());
  return {num_.scaled(c), den_, Reduced{}};
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (var >= chart()->dim()) {
    throw Error(ErrorKind::IndexOutOfRange, "derivative index out of range");
  }
  if (is_polynomial()) return RationalFunction(num_.derivative(var));
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (sgn(d) == 0) throw Error(ErrorKind::Pole, "denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

RationalFunction pow(const RationalFunction& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return RationalFunction(base.chart(), 1) / pow(base, -exponent);
  }
  return RationalFunction(pow(base.numerator(), static_cast<unsigned>(exponent)),
                          pow(base.denominator(), static_cast<unsigned>(exponent)));
}

std::string to_string(const RationalFunction& f) {
  const std::string num = to_string(f.numerator());
  if (f.is_polynomial()) return num;
  const Polynomial& den = f.denominator();
  const bool simple_num = f.numerator().terms().size() == 1 && num.find('/') == std::string::npos;
  // a lone power of one variable needs no parentheses
  const auto& lead = den.leading_exponents();
  const bool simple_den = den.is_monomial() && den.leading_coefficient() == 1 &&
                          std::count_if(lead.begin(), lead.end(), [](int k) { return k != 0; }) == 1;
  return (simple_num ? num : "(" + num + ")") + "/" +
         (simple_den ? to_string(den) : "(" + to_string(den) + ")");
}

}  // namespace pcalc
