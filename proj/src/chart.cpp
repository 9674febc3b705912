#include "pcalc/chart.hpp"

#include <set>

#include "pcalc/error.hpp"

namespace pcalc {

ChartPtr Chart::make(std::string name, std::vector<std::string> coords) {
  if (coords.empty()) {
    throw Error(ErrorKind::InvalidArgument, "chart '" + name + "' must have positive dimension");
  }
  std::set<std::string> seen;
  for (const auto& c : coords) {
    if (c.empty()) throw Error(ErrorKind::InvalidArgument, "empty coordinate name");
    if (!seen.insert(c).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate coordinate '" + c + "' in chart '" + name + "'");
    }
  }
  if (coords.size() > 32) {
    throw Error(ErrorKind::InvalidArgument, "charts are limited to 32 coordinates");
  }
  return ChartPtr(new Chart(std::move(name), std::move(coords)));
}

std::optional<std::size_t> Chart::index_of(const std::string& coord) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == coord) return i;
  }
  return std::nullopt;
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (a.get() != b.get()) {
    throw Error(ErrorKind::ChartMismatch,
                "objects live on different charts ('" + (a ? a->name() : std::string("?")) +
                    "' vs '" + (b ? b->name() : std::string("?")) + "')");
  }
}

}  // namespace pcalc
