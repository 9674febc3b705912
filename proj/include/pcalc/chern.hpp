#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pcalc/polynomial.hpp"

namespace pcalc {

/// Truncated graded commutative ring used for characteristic-class arithmetic.
///   FreeChern(n):  Q[c1..cn], weight(ci) = i, truncated above weight n.
///   Projective(n): Q[h]/(h^{n+1}), with c_i = binom(n+1, i) h^i.
struct GradedRingModel {
  enum class Type { FreeChern, Projective };
  Type type;
  int truncation;

  static GradedRingModel free_chern(int n);
  static GradedRingModel projective(int n);

  std::size_t generator_count() const { return type == Type::FreeChern ? truncation : 1; }
  int generator_weight(std::size_t g) const;
  std::string generator_name(std::size_t g) const;

  friend bool operator==(const GradedRingModel&, const GradedRingModel&) = default;
};

class ChernElement {
 public:
  using Monomial = std::vector<int>;  // exponents of the model's generators
  struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
  };
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  ChernElement(GradedRingModel model, const Rational& constant);
  static ChernElement generator(const GradedRingModel& model, std::size_t g);

  const GradedRingModel& model() const { return model_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int weight_of(const Monomial& m) const;

  /// Part of exactly the given weight.
  ChernElement component(int weight) const;
  Rational constant_term() const;

  ChernElement& operator+=(const ChernElement& o);
  ChernElement& operator-=(const ChernElement& o);
  ChernElement operator-() const;
  ChernElement scaled(const Rational& q) const;

  friend ChernElement operator+(ChernElement a, const ChernElement& b) { return a += b; }
  friend ChernElement operator-(ChernElement a, const ChernElement& b) { return a -= b; }
  friend ChernElement operator*(const ChernElement& a, const ChernElement& b);
  friend bool operator==(const ChernElement& a, const ChernElement& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& m, const Rational& c);

  GradedRingModel model_;
  TermMap terms_;
};

/// c1..cn of the model: the free generators, or binom(n+1, i) h^i.
std::vector<ChernElement> chern_classes(const GradedRingModel& model);

/// b with a·b = 1; throws InvalidArgument unless the constant term is 1.
ChernElement series_inverse(const ChernElement& a);

/// c(Ω_X) = 1 − c1 + c2 − c3 + … for the given classes c1, c2, ….
ChernElement cotangent_total_chern(std::span<const ChernElement> classes);

/// c(Ω_D) = c(Ω_X) / (1 + c1(Ω_X)) for an anticanonical divisor D.
ChernElement divisor_cotangent_chern(std::span<const ChernElement> classes);

/// c1 · (weight-3 part of c(Ω_D)) = c1(c1c2 − c3); needs truncation ≥ 4.
ChernElement obstruction(std::span<const ChernElement> classes);

std::string to_string(const ChernElement& e);

}  // namespace pcalc
