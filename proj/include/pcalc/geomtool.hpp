#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcalc/chart_map.hpp"

namespace pcalc {

/// One affine chart of a blowup: the substitution map and the local equation
/// of the exceptional divisor on the source chart.
class BlowupChart {
 public:
  BlowupChart(ChartMap map, Polynomial exceptional);

  const ChartMap& map() const { return map_; }
  const Polynomial& exceptional() const { return exceptional_; }

 private:
  ChartMap map_;
  Polynomial exceptional_;
};

struct ExceptionalMultiplicity {
  int multiplicity;
  Polynomial proper;   // pullback / exceptional^multiplicity
  Polynomial cleared;  // monomial multiplied in to clear denominators (1 if none)
};

/// Largest k with exceptional^k | (cleared · pullback(f)).
ExceptionalMultiplicity exceptional_multiplicity(const Polynomial& f, const BlowupChart& chart);

/// Rank-2 test of the Jacobian of (f, g) at a common zero p.
bool transversality_at(const Polynomial& f, const Polynomial& g, std::span<const Rational> p);

/// Integer combination of labelled divisors, e.g. D~ + E.
class FormalDivisor {
 public:
  FormalDivisor() = default;
  static FormalDivisor of(const std::string& label, long coefficient = 1);

  const std::map<std::string, long>& terms() const { return terms_; }
  long coefficient(const std::string& label) const;

  FormalDivisor& operator+=(const FormalDivisor& o);
  FormalDivisor& operator-=(const FormalDivisor& o);
  FormalDivisor scaled(long k) const;

  friend FormalDivisor operator+(FormalDivisor a, const FormalDivisor& b) { return a += b; }
  friend FormalDivisor operator-(FormalDivisor a, const FormalDivisor& b) { return a -= b; }
  friend bool operator==(const FormalDivisor&, const FormalDivisor&) = default;

 private:
  std::map<std::string, long> terms_;
};

struct ExceptionalData {
  std::string label;
  long multiplicity;  // π^*D = D~ + Σ multiplicity · E
  long discrepancy;   // K_up = π^*K + Σ discrepancy · E
};

/// −K_up = π^*D − Σ d·E = D~ + Σ (m − d) E for an anticanonical D.
FormalDivisor anticanonical_bookkeeping(const std::string& proper_label,
                                        const std::vector<ExceptionalData>& exceptional);

/// π^*(D)_red = π^*(D) − Σ (i−1) E_i for π^*(D) = Σ i E_i.
FormalDivisor reduced_pullback(const FormalDivisor& pullback);

std::string to_string(const FormalDivisor& d);

}  // namespace pcalc
