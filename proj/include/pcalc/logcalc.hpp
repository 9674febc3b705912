#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcalc/poisson.hpp"

namespace pcalc {

/// Monomial normal-crossing divisor { Π_{i∈B} x_i = 0 } on a chart.
class NCDivisor {
 public:
  NCDivisor(ChartPtr chart, std::vector<std::size_t> branches);

  const ChartPtr& chart() const { return chart_; }
  /// Increasing, distinct, nonempty.
  const std::vector<std::size_t>& branches() const { return branches_; }
  bool is_branch(std::size_t i) const;
  Polynomial equation() const;

 private:
  ChartPtr chart_;
  std::vector<std::size_t> branches_;
};

/// Dual frames of log one-forms (dx_i/x_i on branches, dx_j elsewhere) and log
/// vector fields (x_i∂_i on branches, ∂_j elsewhere).
struct LogFrame {
  NCDivisor divisor;
  std::vector<DiffForm> forms;
  std::vector<MultiVector> fields;
};

LogFrame log_frame(const NCDivisor& divisor);

/// M with Π#(forms[b]) = Σ_a M[a][b] · fields[a]. Requires Π integrable and
/// Pf(Π) = unit · (divisor equation); throws Precondition otherwise and
/// NonRegular when an entry has a pole.
Matrix<RationalFunction> pi_sharp_log_matrix(const PoissonStructure& pi, const LogFrame& frame);

struct LogIsoResult {
  bool isomorphism;
  RationalFunction determinant;
  Matrix<RationalFunction> matrix;
};
LogIsoResult log_duality_iso_check(const PoissonStructure& pi, const LogFrame& frame);

struct PNormalityReport {
  bool pfaffian_reduced = false;
  bool divisor_match = false;
  bool smooth_corank = false;
  bool singular_corank = false;
  std::vector<std::size_t> smooth_coranks;
  std::vector<std::size_t> singular_coranks;
  RationalFunction pfaffian;

  bool p_normal() const {
    return pfaffian_reduced && divisor_match && smooth_corank && singular_corank;
  }
  /// The corank conditions are only checked at the supplied points.
  static constexpr const char* scope = "corank conditions verified at supplied sample points only";
};

using Point = std::vector<Rational>;

/// Sample-based P-normality check. Smooth samples must lie on exactly one
/// branch hyperplane, singular samples on at least two (InvalidArgument
/// otherwise).
PNormalityReport pnormality_check(const PoissonStructure& pi, const NCDivisor& declared,
                                  const std::vector<Point>& smooth_samples,
                                  const std::vector<Point>& singular_samples);

}  // namespace pcalc
