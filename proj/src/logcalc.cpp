#include "pcalc/logcalc.hpp"

#include <algorithm>

namespace pcalc {

NCDivisor::NCDivisor(ChartPtr chart, std::vector<std::size_t> branches)
    : chart_(std::move(chart)), branches_(std::move(branches)) {
  if (branches_.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "a normal-crossing divisor needs at least one branch (use the ordinary frame)");
  }
  std::sort(branches_.begin(), branches_.end());
  if (std::adjacent_find(branches_.begin(), branches_.end()) != branches_.end()) {
    throw Error(ErrorKind::InvalidArgument, "divisor branches must be distinct");
  }
  if (branches_.back() >= chart_->dim()) {
    throw Error(ErrorKind::IndexOutOfRange, "divisor branch index out of range");
  }
}

bool NCDivisor::is_branch(std::size_t i) const {
  return std::binary_search(branches_.begin(), branches_.end(), i);
}

Polynomial NCDivisor::equation() const {
  Polynomial eq(chart_, 1);
  for (auto i : branches_) eq = eq * Polynomial::variable(chart_, i);
  return eq;
}

LogFrame log_frame(const NCDivisor& divisor) {
  const ChartPtr& chart = divisor.chart();
  LogFrame frame{divisor, {}, {}};
  for (std::size_t i = 0; i < chart->dim(); ++i) {
    const RationalFunction xi(Polynomial::variable(chart, i));
    DiffForm dx = DiffForm::generator(chart, i);
    MultiVector del = MultiVector::generator(chart, i);
    if (divisor.is_branch(i)) {
      dx *= RationalFunction(chart, 1) / xi;
      del *= xi;
    }
    frame.forms.push_back(std::move(dx));
    frame.fields.push_back(std::move(del));
  }
  return frame;
}

namespace {

void require_log_preconditions(const PoissonStructure& pi, const NCDivisor& divisor) {
  require_same_chart(pi.chart(), divisor.chart());
  const bool integrable = pi.integrability() == Integrability::Integrable ||
                          (pi.integrability() == Integrability::Unchecked &&
                           check_integrable(pi).integrable);
  if (!integrable) {
    throw Error(ErrorKind::Precondition, "log duality requires an integrable Poisson structure");
  }
  const RationalFunction pf = pfaffian(pi);
  const RationalFunction ratio = pf / RationalFunction(divisor.equation());
  auto unit = ratio.as_constant();
  if (!unit || sgn(*unit) == 0) {
    throw Error(ErrorKind::Precondition, "Pfaffian " + to_string(pf) +
                                             " is not a unit multiple of the divisor equation " +
                                             to_string(divisor.equation()));
  }
}

}  // namespace

Matrix<RationalFunction> pi_sharp_log_matrix(const PoissonStructure& pi, const LogFrame& frame) {
  const NCDivisor& divisor = frame.divisor;
  require_log_preconditions(pi, divisor);
  const ChartPtr& chart = pi.chart();
  const std::size_t n = chart->dim();
  Matrix<RationalFunction> m(n, std::vector<RationalFunction>(n, RationalFunction(chart)));
  for (std::size_t b = 0; b < n; ++b) {
    const MultiVector image = pi_sharp(pi, frame.forms[b]);
    for (std::size_t a = 0; a < n; ++a) {
      RationalFunction entry = image.coefficient(IndexMask{1} << a);
      if (divisor.is_branch(a)) entry /= RationalFunction(Polynomial::variable(chart, a));
      if (!entry.is_polynomial()) {
        throw Error(ErrorKind::NonRegular, "log matrix entry (" + std::to_string(a + 1) + "," +
                                               std::to_string(b + 1) + ") = " + to_string(entry) +
                                               " is not regular");
      }
      m[a][b] = std::move(entry);
    }
  }
  return m;
}

LogIsoResult log_duality_iso_check(const PoissonStructure& pi, const LogFrame& frame) {
  Matrix<RationalFunction> m = pi_sharp_log_matrix(pi, frame);
  RationalFunction det = determinant(m, pi.chart());
  auto c = det.as_constant();
  const bool iso = c && sgn(*c) != 0;
  return {iso, std::move(det), std::move(m)};
}

PNormalityReport pnormality_check(const PoissonStructure& pi, const NCDivisor& declared,
                                  const std::vector<Point>& smooth_samples,
                                  const std::vector<Point>& singular_samples) {
  require_same_chart(pi.chart(), declared.chart());
  const ChartPtr& chart = pi.chart();
  auto branches_through = [&](const Point& p) {
    if (p.size() != chart->dim()) {
      throw Error(ErrorKind::DimensionMismatch, "sample point dimension differs from chart");
    }
    std::size_t count = 0;
    for (auto i : declared.branches()) count += sgn(p[i]) == 0 ? 1 : 0;
    return count;
  };
  for (const auto& p : smooth_samples) {
    if (branches_through(p) != 1) {
      throw Error(ErrorKind::InvalidArgument, "smooth sample must lie on exactly one branch");
    }
  }
  for (const auto& p : singular_samples) {
    if (branches_through(p) < 2) {
      throw Error(ErrorKind::InvalidArgument, "singular sample must lie on at least two branches");
    }
  }

  PNormalityReport report{.smooth_coranks = {}, .singular_coranks = {}, .pfaffian = pfaffian(pi)};
  const RationalFunction& pf = report.pfaffian;
  report.pfaffian_reduced = pf.is_polynomial() && !pf.is_zero() && is_squarefree(pf.numerator());
  if (!pf.is_zero()) {
    auto unit = (pf / RationalFunction(declared.equation())).as_constant();
    report.divisor_match = unit.has_value();
  }
  report.smooth_corank = true;
  for (const auto& p : smooth_samples) {
    report.smooth_coranks.push_back(corank_at_point(pi, p));
    report.smooth_corank = report.smooth_corank && report.smooth_coranks.back() == 2;
  }
  report.singular_corank = true;
  for (const auto& p : singular_samples) {
    report.singular_coranks.push_back(corank_at_point(pi, p));
    report.singular_corank = report.singular_corank && report.singular_coranks.back() > 2;
  }
  return report;
}

}  // namespace pcalc
