#include "pcalc/chart_map.hpp"

#include "pcalc/error.hpp"

namespace pcalc {

ChartMap::ChartMap(ChartPtr source, ChartPtr target, std::vector<RationalFunction> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != target_->dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "chart map needs one image per target coordinate (" +
                    std::to_string(target_->dim()) + "), got " + std::to_string(images_.size()));
  }
  for (const auto& img : images_) require_same_chart(img.chart(), source_);
}

ChartMap ChartMap::identity(const ChartPtr& chart) {
  std::vector<RationalFunction> images;
  for (std::size_t i = 0; i < chart->dim(); ++i) {
    images.emplace_back(Polynomial::variable(chart, i));
  }
  return ChartMap(chart, chart, std::move(images));
}

RationalFunction ChartMap::pullback(const Polynomial& f) const {
  require_same_chart(f.chart(), target_);
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<RationalFunction>> powers(target_->dim());
  auto power = [&](std::size_t i, int k) -> const RationalFunction& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(source_, 1);
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images_[i]);
    return cache[k];
  };
  RationalFunction result(source_);
  for (const auto& [e, c] : f.terms()) {
    RationalFunction term(source_, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= power(i, e[i]);
    }
    result += term;
  }
  return result;
}

RationalFunction ChartMap::pullback(const RationalFunction& f) const {
  const RationalFunction num = pullback(f.numerator());
  const RationalFunction den = pullback(f.denominator());
  if (den.is_zero()) {
    throw Error(ErrorKind::Pole, "pulled-back denominator vanishes identically");
  }
  return num / den;
}

}  // namespace pcalc
