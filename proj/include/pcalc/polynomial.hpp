#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcalc/chart.hpp"

namespace pcalc {

using Rational = mpq_class;
using Exponents = std::vector<int>;

// Degree-lexicographic order, largest first: higher total degree wins, ties go
// to the larger exponent of the lowest-index coordinate.
struct DeglexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by DeglexGreater, so iteration starts at the
/// leading term and two polynomials are equal iff their term maps are equal.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, DeglexGreater>;

  explicit Polynomial(ChartPtr chart);
  Polynomial(ChartPtr chart, const Rational& constant);

  static Polynomial variable(const ChartPtr& chart, std::size_t index);
  static Polynomial monomial(const ChartPtr& chart, Exponents exps, const Rational& coeff);

  const ChartPtr& chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }
  std::size_t dim() const { return chart_->dim(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> as_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// Exponent of `var` that divides every term (the x_var-adic valuation).
  int min_degree_in(std::size_t var) const;

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial scaled(const Rational& c) const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Coefficients with respect to one variable: f = sum_k coeff[k] * x_var^k,
  /// with every coeff[k] free of x_var.
  std::map<int, Polynomial> coefficients_in(std::size_t var) const;

  /// Rescales so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void add_term(const Exponents& e, const Rational& c);

  ChartPtr chart_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& base, unsigned exponent);

/// Quotient q with f = q*g, or nullopt when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Monic greatest common divisor; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// True iff gcd(f, df/dx_1, ..., df/dx_n) is a unit. Throws ZeroInput on f = 0.
bool is_squarefree(const Polynomial& f);

/// Plain text used in diagnostics; the canonical surface syntax lives in printer.hpp.
std::string to_string(const Polynomial& p);
std::string to_string(const Rational& q);

}  // namespace pcalc
