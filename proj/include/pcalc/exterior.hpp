#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcalc/error.hpp"
#include "pcalc/rational_function.hpp"

namespace pcalc {

/// Strictly increasing index set I ⊆ {0..n-1}, bit i set iff i ∈ I.
using IndexMask = std::uint32_t;

inline int grade_of(IndexMask m) { return std::popcount(m); }
std::vector<std::size_t> indices_of(IndexMask m);
IndexMask mask_of(const std::vector<std::size_t>& indices);

/// Grade first, then lexicographic on the increasing index sequences.
struct MaskOrder {
  bool operator()(IndexMask a, IndexMask b) const;
};

/// Sign s with e_a ∧ e_b = s · e_{a∪b}; 0 when the sets overlap.
int wedge_sign(IndexMask a, IndexMask b);

enum class Kind { Vector, Form };

/// An element of the exterior algebra over the rational functions of a chart:
/// multivector fields (Kind::Vector, basis ∂_I) or differential forms
/// (Kind::Form, basis dx_I). Elements may mix grades; operations act
/// gradewise.
template <Kind K>
class Graded {
 public:
  using TermMap = std::map<IndexMask, RationalFunction, MaskOrder>;
  static constexpr Kind kind = K;

  explicit Graded(ChartPtr chart) : chart_(std::move(chart)) {}

  static Graded scalar(const RationalFunction& f) {
    Graded g(f.chart());
    g.add_term(0, f);
    return g;
  }
  static Graded basis(const ChartPtr& chart, IndexMask mask) {
    return term(mask, RationalFunction(chart, 1));
  }
  static Graded term(IndexMask mask, const RationalFunction& coeff) {
    Graded g(coeff.chart());
    g.add_term(mask, coeff);
    return g;
  }
  /// ∂_i or dx_i.
  static Graded generator(const ChartPtr& chart, std::size_t i) {
    if (i >= chart->dim()) throw Error(ErrorKind::IndexOutOfRange, "generator index out of range");
    return basis(chart, IndexMask{1} << i);
  }

  const ChartPtr& chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RationalFunction coefficient(IndexMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? RationalFunction(chart_) : it->second;
  }

  /// The unique grade of a nonzero homogeneous element; nullopt otherwise
  /// (zero counts as homogeneous of every grade and reports nullopt).
  std::optional<int> grade() const {
    std::optional<int> g;
    for (const auto& [m, c] : terms_) {
      if (g && *g != grade_of(m)) return std::nullopt;
      g = grade_of(m);
    }
    return g;
  }
  bool is_homogeneous() const { return terms_.empty() || grade().has_value(); }

  /// Grades present, increasing.
  std::vector<int> grades() const {
    std::vector<int> out;
    for (const auto& [m, c] : terms_) {
      if (out.empty() || out.back() != grade_of(m)) out.push_back(grade_of(m));
    }
    return out;
  }
  Graded component(int g) const {
    Graded r(chart_);
    for (const auto& [m, c] : terms_) {
      if (grade_of(m) == g) r.terms_.emplace(m, c);
    }
    return r;
  }

  void add_term(IndexMask mask, const RationalFunction& coeff) {
    require_same_chart(chart_, coeff.chart());
    if (mask >> chart_->dim() != 0) {
      throw Error(ErrorKind::IndexOutOfRange, "index set exceeds chart dimension");
    }
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mask, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Graded& operator+=(const Graded& o) {
    require_same_chart(chart_, o.chart_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Graded& operator-=(const Graded& o) {
    require_same_chart(chart_, o.chart_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Graded operator-() const {
    Graded r(chart_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Graded& operator*=(const RationalFunction& f) {
    require_same_chart(chart_, f.chart());
    if (f.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= f;
    return *this;
  }
  Graded scaled(const Rational& q) const {
    Graded r(chart_);
    if (sgn(q) == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.scaled(q));
    return r;
  }

  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator*(const RationalFunction& f, Graded a) { return a *= f; }
  friend Graded operator*(Graded a, const RationalFunction& f) { return a *= f; }
  friend bool operator==(const Graded& a, const Graded& b) {
    return a.chart_.get() == b.chart_.get() && a.terms_ == b.terms_;
  }

 private:
  ChartPtr chart_;
  TermMap terms_;
};

using MultiVector = Graded<Kind::Vector>;
using DiffForm = Graded<Kind::Form>;

/// Graded-commutative product; a∧b = (-1)^{|a||b|} b∧a on homogeneous input.
template <Kind K>
Graded<K> wedge(const Graded<K>& a, const Graded<K>& b) {
  require_same_chart(a.chart(), b.chart());
  Graded<K> r(a.chart());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      r.add_term(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return r;
}

/// i_v ω with ⟨∂_I, dx_I⟩ = 1: i_{∂_I}(dx_I ∧ β) = β, so for v = v1∧…∧vp the
/// factor v1 acts first.
DiffForm contract(const MultiVector& v, const DiffForm& omega);
/// i_α P, the mirror of the above: i_{dx_I}(∂_I ∧ Q) = Q.
MultiVector contract(const DiffForm& alpha, const MultiVector& p);

/// Full pairing ⟨P, ω⟩ = Σ_I P_I ω_I.
RationalFunction pairing(const MultiVector& p, const DiffForm& omega);

DiffForm exterior_derivative(const DiffForm& omega);
/// df = Σ ∂f/∂x_i dx_i.
DiffForm differential(const RationalFunction& f);

/// Cartan formula L_v ω = i_v dω + d i_v ω for a homogeneous vector field v.
DiffForm lie_derivative(const MultiVector& v, const DiffForm& omega);

/// v(f) for a vector field v.
RationalFunction apply_field(const MultiVector& v, const RationalFunction& f);

/// Canonical text: terms in grade-then-lex order, e.g. `x1*@1/\@2 + @3/\@4`
/// or `-d(x1)/\d(x2)`. Parses back to an equal value.
std::string to_string(const MultiVector& v);
std::string to_string(const DiffForm& omega);

}  // namespace pcalc
