#pragma once

// Graded bracket generated from its values on "atoms" (functions and the basis
// generators e_i) by the derivation law
//   [P, A∧R] = [P,A]∧R + (-1)^{(p-1)a} A∧[P,R]
// and graded antisymmetry
//   [P, Q] = -(-1)^{(p-1)(q-1)} [Q, P].
// The Schouten bracket (e_i = ∂_i) and the Koszul bracket of a bivector
// (e_i = dx_i) are both instances; they differ only in the atom table.

#include "pcalc/exterior.hpp"

namespace pcalc::detail {

inline int sign_of_exponent(int e) { return (e % 2 == 0) ? 1 : -1; }

template <Kind K, class Atoms>
class AtomBracket {
 public:
  using Elem = Graded<K>;

  AtomBracket(ChartPtr chart, const Atoms& atoms) : chart_(std::move(chart)), atoms_(atoms) {}

  Elem operator()(const Elem& p, const Elem& q) const {
    require_same_chart(p.chart(), q.chart());
    Elem r(chart_);
    for (const auto& [mp, cp] : p.terms()) {
      for (const auto& [mq, cq] : q.terms()) r += term(mp, cp, mq, cq);
    }
    return r;
  }

 private:
  static bool composite(IndexMask m, const RationalFunction& c) {
    const int g = grade_of(m);
    return g >= 2 || (g == 1 && !c.is_constant());
  }

  Elem one_basis(IndexMask m) const { return Elem::basis(chart_, m); }

  Elem term(IndexMask mp, const RationalFunction& cp, IndexMask mq, const RationalFunction& cq) const {
    const int p = grade_of(mp);
    const int q = grade_of(mq);
    if (p == 0 && q == 0) return Elem(chart_);
    const RationalFunction one(chart_, 1);

    if (q >= 1 && !cq.is_constant()) {
      // Q = cq ∧ e_J with cq of grade 0
      Elem r = wedge(term(mp, cp, 0, cq), one_basis(mq));
      r += cq * term(mp, cp, mq, one);
      return r;
    }
    if (q >= 2) {
      // Q = c · e_j ∧ e_rest, j the lowest index
      const Rational c = *cq.as_constant();
      const IndexMask first = mq & (~mq + 1);
      const IndexMask rest = mq ^ first;
      Elem r = wedge(term(mp, cp, first, one), one_basis(rest));
      r += wedge(one_basis(first), term(mp, cp, rest, one)).scaled(sign_of_exponent(p - 1));
      return r.scaled(c);
    }
    if (composite(mp, cp)) {
      return term(mq, cq, mp, cp).scaled(-sign_of_exponent((p - 1) * (q - 1)));
    }
    // both atomic: a function or a constant multiple of one generator
    if (p == 1 && q == 0) {
      return atoms_.generator_function(index(mp), cq).scaled(*cp.as_constant());
    }
    if (p == 0 && q == 1) {
      return -atoms_.generator_function(index(mq), cp).scaled(*cq.as_constant());
    }
    return atoms_.generator_generator(index(mp), index(mq))
        .scaled(*cp.as_constant() * *cq.as_constant());
  }

  static std::size_t index(IndexMask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

  ChartPtr chart_;
  const Atoms& atoms_;
};

}  // namespace pcalc::detail
