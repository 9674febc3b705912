#include "pcalc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pcalc/error.hpp"

namespace pcalc {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool DeglexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

Rational rational_pow(const Rational& base, int exponent) {
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

Polynomial::Polynomial(ChartPtr chart) : chart_(std::move(chart)) {
  if (!chart_) throw Error(ErrorKind::InvalidArgument, "polynomial needs a chart");
}

Polynomial::Polynomial(ChartPtr chart, const Rational& constant) : Polynomial(std::move(chart)) {
  if (sgn(constant) != 0) terms_.emplace(Exponents(chart_->dim(), 0), constant);
}

Polynomial Polynomial::variable(const ChartPtr& chart, std::size_t index) {
  if (index >= chart->dim()) {
    throw Error(ErrorKind::IndexOutOfRange, "coordinate index out of range");
  }
  Exponents e(chart->dim(), 0);
  e[index] = 1;
  return monomial(chart, std::move(e), 1);
}

Polynomial Polynomial::monomial(const ChartPtr& chart, Exponents exps, const Rational& coeff) {
  if (exps.size() != chart->dim()) {
    throw Error(ErrorKind::DimensionMismatch, "exponent vector length differs from chart dimension");
  }
  for (int x : exps) {
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in polynomial");
  }
  Polynomial p(chart);
  if (sgn(coeff) != 0) p.terms_.emplace(std::move(exps), coeff);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && pcalc::total_degree(terms_.begin()->first) == 0;
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.begin()->second;
  return std::nullopt;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return pcalc::total_degree(terms_.begin()->first);
}

int Polynomial::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Polynomial::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

const Exponents& Polynomial::leading_exponents() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "zero polynomial has no leading term");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_chart(chart_, other.chart_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_chart(chart_, other.chart_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(chart_);
  if (sgn(c) == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= dim()) throw Error(ErrorKind::IndexOutOfRange, "derivative index out of range");
  Polynomial r(chart_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents e2 = e;
    e2[var] -= 1;
    r.add_term(e2, c * e[var]);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != dim()) {
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(point.size()) +
                                                  " coordinates, chart has " +
                                                  std::to_string(dim()));
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= rational_pow(point[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

std::map<int, Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::map<int, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    Exponents e2 = e;
    const int k = e2[var];
    e2[var] = 0;
    auto it = out.try_emplace(k, Polynomial(chart_)).first;
    it->second.add_term(e2, c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / leading_coefficient());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.chart_.get() == b.chart_.get() && a.terms_ == b.terms_;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_chart(a.chart(), b.chart());
  Polynomial::TermMap acc;
  Exponents e(a.dim());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = acc.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  Polynomial r(a.chart());
  for (auto& [exp, c] : acc) {
    if (sgn(c) != 0) r += Polynomial::monomial(a.chart(), exp, c);
  }
  return r;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(base.chart(), 1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_chart(f.chart(), g.chart());
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  const Exponents& lg = g.leading_exponents();
  const Rational& cg = g.leading_coefficient();
  Polynomial q(f.chart());
  Polynomial r = f;
  // A single divisor is its own Groebner basis, so an indivisible leading term
  // of the running remainder proves g does not divide f.
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    Exponents shift(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      shift[i] = lr[i] - lg[i];
      if (shift[i] < 0) return std::nullopt;
    }
    const Polynomial t = Polynomial::monomial(f.chart(), std::move(shift), r.leading_coefficient() / cg);
    q += t;
    r -= t * g;
  }
  return q;
}

namespace {

std::optional<std::size_t> highest_variable(const Polynomial& f, const Polynomial& g) {
  for (std::size_t v = f.dim(); v-- > 0;) {
    if (f.degree_in(v) > 0 || g.degree_in(v) > 0) return v;
  }
  return std::nullopt;
}

Polynomial gcd_nonzero(const Polynomial& f, const Polynomial& g);

Polynomial content_in(const Polynomial& f, std::size_t var) {
  Polynomial c(f.chart());
  for (const auto& [k, coeff] : f.coefficients_in(var)) {
    c = c.is_zero() ? coeff.monic() : gcd_nonzero(c, coeff);
    if (c.is_constant()) return Polynomial(f.chart(), 1);
  }
  return c;
}

Polynomial primitive_part(const Polynomial& f, std::size_t var) {
  return *divide_exact(f, content_in(f, var));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  const auto bcoeffs = b.coefficients_in(var);
  const Polynomial& lcb = bcoeffs.at(db);
  Polynomial r = a;
  while (!r.is_zero()) {
    const int dr = r.degree_in(var);
    if (dr < db) break;
    const Polynomial lcr = r.coefficients_in(var).at(dr);
    Exponents shift(a.dim(), 0);
    shift[var] = dr - db;
    r = lcb * r - lcr * Polynomial::monomial(a.chart(), shift, 1) * b;
  }
  return r;
}

// Content/primitive-part recursion on the highest variable present, with a
// primitive pseudo-remainder sequence at each level.
Polynomial gcd_nonzero(const Polynomial& f, const Polynomial& g) {
  const ChartPtr& chart = f.chart();
  if (f.is_constant() || g.is_constant()) return Polynomial(chart, 1);
  const std::size_t v = *highest_variable(f, g);
  if (f.degree_in(v) == 0) return gcd_nonzero(f, content_in(g, v));
  if (g.degree_in(v) == 0) return gcd_nonzero(content_in(f, v), g);

  const Polynomial cf = content_in(f, v);
  const Polynomial cg = content_in(g, v);
  const Polynomial c = gcd_nonzero(cf, cg);
  Polynomial a = *divide_exact(f, cf);
  Polynomial b = *divide_exact(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return c;
    a = std::move(b);
    b = primitive_part(r, v).monic();
  }
  return (c * primitive_part(b, v)).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  require_same_chart(f.chart(), g.chart());
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  return gcd_nonzero(f, g).monic();
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "square-freeness of the zero polynomial");
  Polynomial g = f.monic();
  for (std::size_t i = 0; i < f.dim() && !g.is_constant(); ++i) g = gcd(g, f.derivative(i));
  return g.is_constant();
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    const bool constant = total_degree(e) == 0;
    if (constant || mag != 1) {
      os << mag.get_str();
      if (!constant) os << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << p.chart()->coord(i);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace pcalc
