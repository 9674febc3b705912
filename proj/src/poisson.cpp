#include "pcalc/poisson.hpp"

#include <set>

#include "atom_bracket.hpp"

namespace pcalc {

PoissonStructure::PoissonStructure(MultiVector bivector) : PoissonStructure(std::move(bivector), Integrability::Unchecked) {}

PoissonStructure::PoissonStructure(MultiVector bivector, Integrability flag)
    : bivector_(std::move(bivector)), flag_(flag) {
  if (!bivector_.is_zero() && bivector_.grade() != 2) {
    throw Error(ErrorKind::InvalidArgument, "a Poisson structure needs a homogeneous bivector");
  }
}

namespace {

struct SchoutenAtoms {
  MultiVector generator_function(std::size_t i, const RationalFunction& g) const {
    return MultiVector::scalar(g.derivative(i));
  }
  MultiVector generator_generator(std::size_t, std::size_t) const { return MultiVector(chart); }
  ChartPtr chart;
};

struct KoszulAtoms {
  DiffForm generator_function(std::size_t i, const RationalFunction& g) const {
    const DiffForm dxi = DiffForm::generator(pi->chart(), i);
    return DiffForm::scalar(pairing(pi->bivector(), wedge(dxi, differential(g))));
  }
  DiffForm generator_generator(std::size_t i, std::size_t j) const {
    const IndexMask m = (IndexMask{1} << i) | (IndexMask{1} << j);
    if (i == j) return DiffForm(pi->chart());
    const RationalFunction pij = pi->bivector().coefficient(m);
    return differential(i < j ? pij : -pij);
  }
  const PoissonStructure* pi;
};

}  // namespace

MultiVector schouten_bracket(const MultiVector& p, const MultiVector& q) {
  require_same_chart(p.chart(), q.chart());
  const SchoutenAtoms atoms{p.chart()};
  return detail::AtomBracket<Kind::Vector, SchoutenAtoms>(p.chart(), atoms)(p, q);
}

IntegrabilityCheck check_integrable(const PoissonStructure& pi) {
  MultiVector w = schouten_bracket(pi.bivector(), pi.bivector());
  const bool ok = w.is_zero();
  return {PoissonStructure(pi.bivector(), ok ? Integrability::Integrable : Integrability::NonIntegrable),
          ok, std::move(w)};
}

MultiVector lichnerowicz(const PoissonStructure& pi, const MultiVector& p) {
  return schouten_bracket(p, pi.bivector());
}

HamiltonianField hamiltonian(const PoissonStructure& pi, const RationalFunction& f) {
  return contract(differential(f), pi.bivector());
}

RationalFunction poisson_bracket(const PoissonStructure& pi, const RationalFunction& f,
                                 const RationalFunction& g) {
  return pairing(pi.bivector(), wedge(differential(f), differential(g)));
}

DiffForm codifferential(const PoissonStructure& pi, const DiffForm& omega) {
  const MultiVector& p = pi.bivector();
  return contract(p, exterior_derivative(omega)) - exterior_derivative(contract(p, omega));
}

DiffForm koszul_bracket(const PoissonStructure& pi, const DiffForm& a, const DiffForm& b) {
  require_same_chart(a.chart(), b.chart());
  require_same_chart(pi.chart(), a.chart());
  const KoszulAtoms atoms{&pi};
  return detail::AtomBracket<Kind::Form, KoszulAtoms>(pi.chart(), atoms)(a, b);
}

MultiVector pi_sharp(const PoissonStructure& pi, const DiffForm& omega) {
  require_same_chart(pi.chart(), omega.chart());
  const ChartPtr& chart = pi.chart();
  std::vector<MultiVector> images;
  images.reserve(chart->dim());
  for (std::size_t i = 0; i < chart->dim(); ++i) {
    images.push_back(contract(DiffForm::generator(chart, i), pi.bivector()));
  }
  MultiVector r(chart);
  for (const auto& [m, c] : omega.terms()) {
    MultiVector t = MultiVector::scalar(c);
    for (std::size_t i : indices_of(m)) t = wedge(t, images[i]);
    r += t;
  }
  return r;
}

Matrix<RationalFunction> coefficient_matrix(const PoissonStructure& pi) {
  const ChartPtr& chart = pi.chart();
  const std::size_t n = chart->dim();
  Matrix<RationalFunction> m(n, std::vector<RationalFunction>(n, RationalFunction(chart)));
  for (const auto& [mask, c] : pi.bivector().terms()) {
    const auto idx = indices_of(mask);
    m[idx[0]][idx[1]] = c;
    m[idx[1]][idx[0]] = -c;
  }
  return m;
}

RationalFunction pfaffian(const PoissonStructure& pi) {
  const ChartPtr& chart = pi.chart();
  if (chart->dim() % 2 != 0) {
    throw Error(ErrorKind::DimensionMismatch, "Pfaffian needs an even-dimensional chart");
  }
  const std::size_t n = chart->dim() / 2;
  MultiVector power = MultiVector::scalar(RationalFunction(chart, 1));
  Rational factorial = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    power = wedge(power, pi.bivector());
    factorial *= static_cast<unsigned long>(k);
  }
  const IndexMask top = chart->dim() == 32 ? ~IndexMask{0} : (IndexMask{1} << chart->dim()) - 1;
  return power.coefficient(top).scaled(1 / factorial);
}

namespace {

Polynomial embed(const Polynomial& p, const ChartPtr& target, std::size_t offset) {
  Polynomial r(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents e2(target->dim(), 0);
    std::copy(e.begin(), e.end(), e2.begin() + static_cast<std::ptrdiff_t>(offset));
    r += Polynomial::monomial(target, std::move(e2), c);
  }
  return r;
}

MultiVector embed(const MultiVector& v, const ChartPtr& target, std::size_t offset) {
  MultiVector r(target);
  for (const auto& [m, c] : v.terms()) {
    r.add_term(m << offset, RationalFunction(embed(c.numerator(), target, offset),
                                             embed(c.denominator(), target, offset)));
  }
  return r;
}

}  // namespace

PoissonStructure product_structure(const PoissonStructure& a, const PoissonStructure& b) {
  const ChartPtr& ca = a.chart();
  const ChartPtr& cb = b.chart();
  std::vector<std::string> coords = ca->coords();
  std::set<std::string> used(coords.begin(), coords.end());
  for (std::string name : cb->coords()) {
    while (used.count(name) != 0) name += "_2";
    used.insert(name);
    coords.push_back(name);
  }
  const ChartPtr product = Chart::make(ca->name() + "x" + cb->name(), std::move(coords));
  MultiVector sum = embed(a.bivector(), product, 0) + embed(b.bivector(), product, ca->dim());
  const bool both = a.integrability() == Integrability::Integrable &&
                    b.integrability() == Integrability::Integrable;
  return PoissonStructure(std::move(sum), both ? Integrability::Integrable : Integrability::Unchecked);
}

std::size_t corank_at_point(const PoissonStructure& pi, std::span<const Rational> point) {
  const ChartPtr& chart = pi.chart();
  if (point.size() != chart->dim()) {
    throw Error(ErrorKind::DimensionMismatch, "point dimension differs from chart dimension");
  }
  const auto coeffs = coefficient_matrix(pi);
  Matrix<Rational> m(chart->dim(), std::vector<Rational>(chart->dim()));
  for (std::size_t i = 0; i < chart->dim(); ++i) {
    for (std::size_t j = 0; j < chart->dim(); ++j) {
      if (!coeffs[i][j].is_zero()) m[i][j] = coeffs[i][j].evaluate(point);
    }
  }
  return chart->dim() - rank(std::move(m));
}

}  // namespace pcalc
