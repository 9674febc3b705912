#include "pcalc/geomtool.hpp"

#include <sstream>

#include "pcalc/error.hpp"
#include "pcalc/linalg.hpp"

namespace pcalc {

BlowupChart::BlowupChart(ChartMap map, Polynomial exceptional)
    : map_(std::move(map)), exceptional_(std::move(exceptional)) {
  require_same_chart(exceptional_.chart(), map_.source());
  if (exceptional_.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "exceptional divisor equation must be nonzero");
  }
  if (!is_squarefree(exceptional_)) {
    throw Error(ErrorKind::InvalidArgument, "exceptional divisor equation must be square-free");
  }
}

ExceptionalMultiplicity exceptional_multiplicity(const Polynomial& f, const BlowupChart& chart) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "multiplicity of the zero polynomial");
  const RationalFunction pulled = chart.map().pullback(f);
  const Polynomial& den = pulled.denominator();
  if (!den.is_monomial()) {
    throw Error(ErrorKind::Precondition,
                "pullback denominator " + to_string(den) + " is not a monomial");
  }
  Polynomial proper = pulled.numerator();
  int k = 0;
  while (auto q = divide_exact(proper, chart.exceptional())) {
    proper = std::move(*q);
    ++k;
  }
  return {k, std::move(proper), den};
}

bool transversality_at(const Polynomial& f, const Polynomial& g, std::span<const Rational> p) {
  require_same_chart(f.chart(), g.chart());
  if (sgn(f.evaluate(p)) != 0 || sgn(g.evaluate(p)) != 0) {
    throw Error(ErrorKind::Precondition, "point does not lie on both hypersurfaces");
  }
  const std::size_t n = f.dim();
  Matrix<Rational> jac(2, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    jac[0][i] = f.derivative(i).evaluate(p);
    jac[1][i] = g.derivative(i).evaluate(p);
  }
  return rank(std::move(jac)) == 2;
}

FormalDivisor FormalDivisor::of(const std::string& label, long coefficient) {
  FormalDivisor d;
  if (coefficient != 0) d.terms_[label] = coefficient;
  return d;
}

long FormalDivisor::coefficient(const std::string& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? 0 : it->second;
}

FormalDivisor& FormalDivisor::operator+=(const FormalDivisor& o) {
  for (const auto& [label, c] : o.terms_) {
    long& slot = terms_[label];
    slot += c;
    if (slot == 0) terms_.erase(label);
  }
  return *this;
}

FormalDivisor& FormalDivisor::operator-=(const FormalDivisor& o) { return *this += o.scaled(-1); }

FormalDivisor FormalDivisor::scaled(long k) const {
  FormalDivisor r;
  if (k == 0) return r;
  for (const auto& [label, c] : terms_) r.terms_[label] = c * k;
  return r;
}

FormalDivisor anticanonical_bookkeeping(const std::string& proper_label,
                                        const std::vector<ExceptionalData>& exceptional) {
  FormalDivisor pullback = FormalDivisor::of(proper_label);
  FormalDivisor discrepancy;
  for (const auto& e : exceptional) {
    pullback += FormalDivisor::of(e.label, e.multiplicity);
    discrepancy += FormalDivisor::of(e.label, e.discrepancy);
  }
  // −K_up = −π^*K − Σ d E and −K = D, so −K_up = π^*D − Σ d E
  return pullback - discrepancy;
}

FormalDivisor reduced_pullback(const FormalDivisor& pullback) {
  FormalDivisor excess;
  for (const auto& [label, c] : pullback.terms()) {
    if (c > 1) excess += FormalDivisor::of(label, c - 1);
  }
  return pullback - excess;
}

std::string to_string(const FormalDivisor& d) {
  if (d.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, c] : d.terms()) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const long mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << "*";
    os << label;
  }
  return os.str();
}

}  // namespace pcalc
