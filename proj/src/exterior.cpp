#include "pcalc/exterior.hpp"

#include <sstream>

namespace pcalc {

std::vector<std::size_t> indices_of(IndexMask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i);
  }
  return out;
}

IndexMask mask_of(const std::vector<std::size_t>& indices) {
  IndexMask m = 0;
  for (auto i : indices) m |= IndexMask{1} << i;
  return m;
}

bool MaskOrder::operator()(IndexMask a, IndexMask b) const {
  const int ga = grade_of(a);
  const int gb = grade_of(b);
  if (ga != gb) return ga < gb;
  const IndexMask diff = a ^ b;
  if (diff == 0) return false;
  const IndexMask lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

int wedge_sign(IndexMask a, IndexMask b) {
  if ((a & b) != 0) return 0;
  int inversions = 0;
  for (IndexMask rest = b; rest != 0; rest &= rest - 1) {
    const IndexMask bit = rest & (~rest + 1);
    inversions += std::popcount(a & ~((bit << 1) - 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

namespace {

// i_{e_I}(e_J) = sign(I, J\I) e_{J\I} when I ⊆ J, else 0; shared by both
// contraction directions.
template <Kind Out, Kind In>
Graded<In> contract_impl(const Graded<Out>& a, const Graded<In>& b) {
  require_same_chart(a.chart(), b.chart());
  Graded<In> r(b.chart());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma & mb) != ma) continue;
      const IndexMask rest = mb & ~ma;
      const int s = wedge_sign(ma, rest);
      r.add_term(rest, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return r;
}

}  // namespace

DiffForm contract(const MultiVector& v, const DiffForm& omega) { return contract_impl(v, omega); }

MultiVector contract(const DiffForm& alpha, const MultiVector& p) { return contract_impl(alpha, p); }

RationalFunction pairing(const MultiVector& p, const DiffForm& omega) {
  require_same_chart(p.chart(), omega.chart());
  RationalFunction sum(p.chart());
  for (const auto& [m, c] : p.terms()) {
    auto it = omega.terms().find(m);
    if (it != omega.terms().end()) sum += c * it->second;
  }
  return sum;
}

DiffForm differential(const RationalFunction& f) {
  DiffForm r(f.chart());
  for (std::size_t i = 0; i < f.chart()->dim(); ++i) r.add_term(IndexMask{1} << i, f.derivative(i));
  return r;
}

DiffForm exterior_derivative(const DiffForm& omega) {
  DiffForm r(omega.chart());
  for (const auto& [m, c] : omega.terms()) {
    for (std::size_t i = 0; i < omega.chart()->dim(); ++i) {
      const IndexMask bit = IndexMask{1} << i;
      const int s = wedge_sign(bit, m);
      if (s == 0) continue;
      const RationalFunction dc = c.derivative(i);
      r.add_term(bit | m, s > 0 ? dc : -dc);
    }
  }
  return r;
}

DiffForm lie_derivative(const MultiVector& v, const DiffForm& omega) {
  require_same_chart(v.chart(), omega.chart());
  if (!v.is_zero() && v.grade() != 1) {
    throw Error(ErrorKind::InvalidArgument, "Lie derivative needs a homogeneous vector field");
  }
  return contract(v, exterior_derivative(omega)) + exterior_derivative(contract(v, omega));
}

RationalFunction apply_field(const MultiVector& v, const RationalFunction& f) {
  return pairing(v, differential(f));
}

namespace {

std::string basis_text(const Chart& chart, IndexMask m, Kind kind) {
  std::string out;
  for (auto i : indices_of(m)) {
    if (!out.empty()) out += "/\\";
    out += kind == Kind::Vector ? "@" + std::to_string(i + 1) : "d(" + chart.coord(i) + ")";
  }
  return out;
}

template <Kind K>
std::string graded_text(const Graded<K>& g) {
  if (g.is_zero()) return "0";
  if (g.terms().size() == 1 && g.terms().begin()->first == 0) {
    return to_string(g.terms().begin()->second);
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : g.terms()) {
    const bool single = c.numerator().is_monomial();
    const bool negative = single && sgn(c.numerator().leading_coefficient()) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const RationalFunction mag = negative ? -c : c;
    const std::string basis = basis_text(*g.chart(), m, K);
    if (!single) {
      os << "(" << to_string(mag) << ")";
      if (m != 0) os << "*" << basis;
    } else if (m == 0) {
      os << to_string(mag);
    } else if (mag.is_constant() && *mag.as_constant() == 1) {
      os << basis;
    } else {
      os << to_string(mag) << "*" << basis;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const MultiVector& v) { return graded_text(v); }
std::string to_string(const DiffForm& omega) { return graded_text(omega); }

}  // namespace pcalc
