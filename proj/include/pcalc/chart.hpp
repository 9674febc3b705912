#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pcalc {

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

/// A named affine coordinate system. Charts are compared by identity: two
/// charts with the same name and coordinates are still different ambients.
class Chart {
 public:
  static ChartPtr make(std::string name, std::vector<std::string> coords);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::string& coord(std::size_t i) const { return coords_.at(i); }
  std::optional<std::size_t> index_of(const std::string& coord) const;

 private:
  Chart(std::string name, std::vector<std::string> coords)
      : name_(std::move(name)), coords_(std::move(coords)) {}

  std::string name_;
  std::vector<std::string> coords_;
};

/// Throws ChartMismatch unless both pointers name the same chart.
void require_same_chart(const ChartPtr& a, const ChartPtr& b);

}  // namespace pcalc
