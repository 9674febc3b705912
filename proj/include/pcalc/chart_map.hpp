#pragma once

#include <vector>

#include "pcalc/rational_function.hpp"

namespace pcalc {

/// A map source -> target given by one rational function on the source per
/// target coordinate. Functions on the target pull back to the source.
class ChartMap {
 public:
  ChartMap(ChartPtr source, ChartPtr target, std::vector<RationalFunction> images);

  static ChartMap identity(const ChartPtr& chart);

  const ChartPtr& source() const { return source_; }
  const ChartPtr& target() const { return target_; }
  const std::vector<RationalFunction>& images() const { return images_; }

  /// Substitutes the coordinate images. Throws Pole when the pulled-back
  /// denominator is identically zero.
  RationalFunction pullback(const RationalFunction& f) const;
  RationalFunction pullback(const Polynomial& f) const;

 private:
  ChartPtr source_;
  ChartPtr target_;
  std::vector<RationalFunction> images_;
};

}  // namespace pcalc
