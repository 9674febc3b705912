#pragma once

#include <vector>

#include "pcalc/exterior.hpp"
#include "pcalc/linalg.hpp"

namespace pcalc {

enum class Integrability { Unchecked, Integrable, NonIntegrable };

class PoissonStructure;
struct IntegrabilityCheck;
IntegrabilityCheck check_integrable(const PoissonStructure& pi);
/// Σ p_i^*(Π_i) on the concatenated chart. Colliding coordinate names of the
/// second factor get a "_2" suffix.
PoissonStructure product_structure(const PoissonStructure& a, const PoissonStructure& b);

/// A bivector field on a chart together with what is known about [Π,Π].
/// The flag is only ever set by check_integrable (or by constructions whose
/// integrability is a theorem, such as products of integrable factors).
class PoissonStructure {
 public:
  explicit PoissonStructure(MultiVector bivector);

  const MultiVector& bivector() const { return bivector_; }
  const ChartPtr& chart() const { return bivector_.chart(); }
  Integrability integrability() const { return flag_; }

 private:
  PoissonStructure(MultiVector bivector, Integrability flag);

  MultiVector bivector_;
  Integrability flag_ = Integrability::Unchecked;

  friend IntegrabilityCheck check_integrable(const PoissonStructure& pi);
  friend PoissonStructure product_structure(const PoissonStructure& a, const PoissonStructure& b);
};

/// Grade-1 multivector i_{df}Π.
using HamiltonianField = MultiVector;

/// Schouten–Nijenhuis bracket. Extends [X, f] = X(f) and the Lie bracket of
/// vector fields; biderivation of ∧ in the sense
///   [P, Q∧R] = [P,Q]∧R + (-1)^{(p-1)q} Q∧[P,R],
///   [P, Q]   = -(-1)^{(p-1)(q-1)} [Q, P].
MultiVector schouten_bracket(const MultiVector& p, const MultiVector& q);

struct IntegrabilityCheck {
  PoissonStructure structure;  // flag set
  bool integrable;
  MultiVector witness;  // [Π,Π]; zero iff integrable
};

/// [P, Π]. With the conventions above, lichnerowicz(Π, f) = kLichnerowiczSign ·
/// hamiltonian(Π, f) for every function f.
MultiVector lichnerowicz(const PoissonStructure& pi, const MultiVector& p);
inline constexpr int kLichnerowiczSign = -1;

HamiltonianField hamiltonian(const PoissonStructure& pi, const RationalFunction& f);

/// {f, g} = ⟨Π, df∧dg⟩.
RationalFunction poisson_bracket(const PoissonStructure& pi, const RationalFunction& f,
                                 const RationalFunction& g);

/// δ = i_Π d − d i_Π, lowering the form degree by one.
DiffForm codifferential(const PoissonStructure& pi, const DiffForm& omega);

/// Koszul bracket of forms. On generators [dx_i, dx_j] = d{x_i, x_j} and
/// [dx_i, g] = {x_i, g}; it extends by the Schouten bracket's laws.
DiffForm koszul_bracket(const PoissonStructure& pi, const DiffForm& a, const DiffForm& b);

/// Π#, wedge-multiplicative extension of α ↦ i_α Π (identity on functions).
MultiVector pi_sharp(const PoissonStructure& pi, const DiffForm& omega);

/// Skew matrix [Π_ij] with Π = Σ_{i<j} Π_ij ∂_i∧∂_j.
Matrix<RationalFunction> coefficient_matrix(const PoissonStructure& pi);

/// Pf with Π^{∧n} = n!·Pf·∂_1∧…∧∂_2n. Throws DimensionMismatch on odd dimension.
RationalFunction pfaffian(const PoissonStructure& pi);

/// 2n − rank[Π_ij(p)]. Throws Pole if a coefficient is singular at p.
std::size_t corank_at_point(const PoissonStructure& pi, std::span<const Rational> point);

}  // namespace pcalc
