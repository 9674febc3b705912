#include "pcalc/chern.hpp"

#include <sstream>

#include "pcalc/error.hpp"

namespace pcalc {

GradedRingModel GradedRingModel::free_chern(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "free-chern model needs n >= 1");
  return {Type::FreeChern, n};
}

GradedRingModel GradedRingModel::projective(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "projective model needs n >= 1");
  return {Type::Projective, n};
}

int GradedRingModel::generator_weight(std::size_t g) const {
  return type == Type::FreeChern ? static_cast<int>(g) + 1 : 1;
}

std::string GradedRingModel::generator_name(std::size_t g) const {
  return type == Type::FreeChern ? "c" + std::to_string(g + 1) : "h";
}

bool ChernElement::MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  // generator i has weight i+1 in both models
  auto weight = [](const Monomial& m) {
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * static_cast<int>(i + 1);
    return w;
  };
  const int wa = weight(a);
  const int wb = weight(b);
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

ChernElement::ChernElement(GradedRingModel model, const Rational& constant) : model_(model) {
  add_term(Monomial(model_.generator_count(), 0), constant);
}

ChernElement ChernElement::generator(const GradedRingModel& model, std::size_t g) {
  if (g >= model.generator_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "generator index out of range");
  }
  ChernElement e(model, 0);
  Monomial m(model.generator_count(), 0);
  m[g] = 1;
  e.add_term(m, 1);
  return e;
}

int ChernElement::weight_of(const Monomial& m) const {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * model_.generator_weight(i);
  return w;
}

void ChernElement::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0 || weight_of(m) > model_.truncation) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ChernElement ChernElement::component(int weight) const {
  ChernElement r(model_, 0);
  for (const auto& [m, c] : terms_) {
    if (weight_of(m) == weight) r.add_term(m, c);
  }
  return r;
}

Rational ChernElement::constant_term() const {
  auto it = terms_.find(Monomial(model_.generator_count(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

namespace {
void require_same_model(const GradedRingModel& a, const GradedRingModel& b) {
  if (!(a == b)) throw Error(ErrorKind::KindMismatch, "Chern elements from different ring models");
}
}  // namespace

ChernElement& ChernElement::operator+=(const ChernElement& o) {
  require_same_model(model_, o.model_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ChernElement& ChernElement::operator-=(const ChernElement& o) {
  require_same_model(model_, o.model_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ChernElement ChernElement::operator-() const { return scaled(-1); }

ChernElement ChernElement::scaled(const Rational& q) const {
  ChernElement r(model_, 0);
  for (const auto& [m, c] : terms_) r.add_term(m, c * q);
  return r;
}

ChernElement operator*(const ChernElement& a, const ChernElement& b) {
  require_same_model(a.model_, b.model_);
  ChernElement r(a.model_, 0);
  ChernElement::Monomial m(a.model_.generator_count());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

std::vector<ChernElement> chern_classes(const GradedRingModel& model) {
  std::vector<ChernElement> out;
  if (model.type == GradedRingModel::Type::FreeChern) {
    for (std::size_t g = 0; g < model.generator_count(); ++g) {
      out.push_back(ChernElement::generator(model, g));
    }
    return out;
  }
  const ChernElement h = ChernElement::generator(model, 0);
  ChernElement power(model, 1);
  mpz_class binom = 1;
  const int n = model.truncation;
  for (int i = 1; i <= n; ++i) {
    power = power * h;
    binom = binom * (n + 2 - i) / i;  // binom(n+1, i)
    out.push_back(power.scaled(Rational(binom)));
  }
  return out;
}

ChernElement series_inverse(const ChernElement& a) {
  if (a.constant_term() != 1) {
    throw Error(ErrorKind::InvalidArgument, "series inverse needs constant term 1");
  }
  // a = 1 - u with u nilpotent of order > truncation: a^{-1} = Σ u^k
  const ChernElement one(a.model(), 1);
  const ChernElement u = one - a;
  ChernElement result = one;
  ChernElement power = one;
  for (int k = 1; k <= a.model().truncation; ++k) {
    power = power * u;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

namespace {
const GradedRingModel& model_of(std::span<const ChernElement> classes) {
  if (classes.empty()) throw Error(ErrorKind::InvalidArgument, "no Chern classes given");
  return classes.front().model();
}
}  // namespace

ChernElement cotangent_total_chern(std::span<const ChernElement> classes) {
  ChernElement total(model_of(classes), 1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    total += (i % 2 == 0) ? -classes[i] : classes[i];
  }
  return total;
}

ChernElement divisor_cotangent_chern(std::span<const ChernElement> classes) {
  const GradedRingModel& model = model_of(classes);
  // c1(Ω_X) = -c1
  const ChernElement one_plus_c1_omega = ChernElement(model, 1) - classes[0];
  return cotangent_total_chern(classes) * series_inverse(one_plus_c1_omega);
}

ChernElement obstruction(std::span<const ChernElement> classes) {
  const GradedRingModel& model = model_of(classes);
  if (model.truncation < 4) {
    throw Error(ErrorKind::Precondition,
                "the obstruction lives in weight 4; truncation " + std::to_string(model.truncation) +
                    " is too small");
  }
  return classes[0] * divisor_cotangent_chern(classes).component(3);
}

std::string to_string(const ChernElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    const bool constant = e.weight_of(m) == 0;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (constant || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t g = 0; g < m.size(); ++g) {
      if (m[g] == 0) continue;
      if (need_star) os << "*";
      os << e.model().generator_name(g);
      if (m[g] > 1) os << "^" << m[g];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace pcalc
