#include "doctest.h"
#include "oracles.hpp"

using namespace pcalc;
using oracle::var;

namespace {

MultiVector d_(const ChartPtr& c, std::size_t i) { return MultiVector::generator(c, i); }
DiffForm dx(const ChartPtr& c, std::size_t i) { return DiffForm::generator(c, i); }

}  // namespace

TEST_CASE("wedge signs") {
  auto X = oracle::chart_x(4);
  CHECK(wedge(d_(X, 0), d_(X, 1)) == MultiVector::basis(X, 0b11));
  CHECK(wedge(d_(X, 1), d_(X, 0)) == -MultiVector::basis(X, 0b11));
  CHECK(wedge(var(X, 0) * d_(X, 0), MultiVector::basis(X, 0b11)).is_zero());
  CHECK(wedge_sign(0b0100, 0b0011) == 1);
  CHECK(wedge_sign(0b0010, 0b0101) == -1);
  CHECK(wedge_sign(0b0011, 0b0010) == 0);
}

TEST_CASE("contraction examples") {
  auto X = oracle::chart_x(4);
  const auto x1 = var(X, 0);
  const DiffForm dx12 = wedge(dx(X, 0), dx(X, 1));
  CHECK(contract(MultiVector::basis(X, 0b11), dx12) == DiffForm::scalar(RationalFunction(X, 1)));
  const MultiVector pi = oracle::weinstein(X);
  CHECK(contract(pi, dx12) == DiffForm::scalar(x1));
  CHECK(contract(d_(X, 2), dx12).is_zero());

  const MultiVector p = x1 * MultiVector::basis(X, 0b11);
  CHECK(contract(dx(X, 0), p) == x1 * d_(X, 1));
  CHECK(contract(dx(X, 2), MultiVector::basis(X, 0b11)).is_zero());
  CHECK(contract(dx12, MultiVector::basis(X, 0b11)) == MultiVector::scalar(RationalFunction(X, 1)));
}

TEST_CASE("exterior derivative examples") {
  auto X = oracle::chart_x(2);
  const auto x1 = var(X, 0), x2 = var(X, 1);
  CHECK(differential(x1 * x2) == x2 * dx(X, 0) + x1 * dx(X, 1));
  CHECK(exterior_derivative(dx(X, 0)).is_zero());
  CHECK(exterior_derivative(x1 * dx(X, 1)) == wedge(dx(X, 0), dx(X, 1)));
}

TEST_CASE("Lie derivative examples") {
  auto X = oracle::chart_x(2);
  const auto x1 = var(X, 0), x2 = var(X, 1);
  CHECK(lie_derivative(d_(X, 0), x1 * dx(X, 1)) == dx(X, 1));
  CHECK(lie_derivative(x1 * d_(X, 0), dx(X, 0)) == dx(X, 0));
  CHECK(lie_derivative(d_(X, 1), DiffForm::scalar(x1)).is_zero());
  CHECK(apply_field(d_(X, 1), x1).is_zero());
  CHECK_THROWS_AS(lie_derivative(MultiVector::basis(X, 0b11), dx(X, 0)), Error);
  (void)x2;
}

TEST_CASE("printing") {
  auto X = oracle::chart_x(4);
  const MultiVector pi = oracle::weinstein(X);
  CHECK(to_string(pi) == "x1*@1/\\@2 + @3/\\@4");
  CHECK(to_string(-wedge(dx(X, 0), dx(X, 1))) == "-d(x1)/\\d(x2)");
  CHECK(to_string(MultiVector(X)) == "0");
  const RationalFunction f = var(X, 0) + RationalFunction(X, 1);
  CHECK(to_string(f * d_(X, 0) - d_(X, 1)) == "(x1 + 1)*@1 - @2");
}

TEST_CASE("wedge associativity and graded commutativity") {
  oracle::Random rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto X = oracle::chart_x(static_cast<std::size_t>(rng.integer(2, 4)));
    const int n = static_cast<int>(X->dim());
    const int ga = rng.integer(0, n), gb = rng.integer(0, n), gc = rng.integer(0, n);
    const auto a = rng.homogeneous<DiffForm>(X, ga, 2);
    const auto b = rng.homogeneous<DiffForm>(X, gb, 2);
    const auto c = rng.homogeneous<MultiVector>(X, gc, 2);
    const auto e = rng.homogeneous<MultiVector>(X, ga, 2);
    CHECK(wedge(wedge(a, b), a) == wedge(a, wedge(b, a)));
    CHECK(wedge(a, b) == ((ga * gb) % 2 ? -wedge(b, a) : wedge(b, a)));
    CHECK(wedge(c, e) == ((gc * ga) % 2 ? -wedge(e, c) : wedge(e, c)));
    const auto ref = oracle::from_terms<DiffForm>(X, oracle::wedge_terms(oracle::terms_of(a), oracle::terms_of(b)));
    CHECK(wedge(a, b) == ref);
  }
}

TEST_CASE("d squares to zero") {
  oracle::Random rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto X = oracle::chart_x(static_cast<std::size_t>(rng.integer(1, 4)));
    const auto w = rng.homogeneous<DiffForm>(X, rng.integer(0, static_cast<int>(X->dim())), 3);
    CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
  }
}

TEST_CASE("contraction by a vector field is a graded derivation") {
  oracle::Random rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    auto X = oracle::chart_x(4);
    const auto v = rng.homogeneous<MultiVector>(X, 1, 2);
    const int ga = rng.integer(0, 3);
    const auto a = rng.homogeneous<DiffForm>(X, ga, 2);
    const auto b = rng.homogeneous<DiffForm>(X, rng.integer(0, 3), 2);
    const DiffForm rhs = wedge(contract(v, a), b) + (ga % 2 ? -wedge(a, contract(v, b)) : wedge(a, contract(v, b)));
    CHECK(contract(v, wedge(a, b)) == rhs);
  }
}

TEST_CASE("adjunction between contraction and wedge") {
  oracle::Random rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    auto X = oracle::chart_x(4);
    const int ga = rng.integer(0, 2), gb = rng.integer(0, 2);
    const auto alpha = rng.homogeneous<DiffForm>(X, ga, 2);
    const auto beta = rng.homogeneous<DiffForm>(X, gb, 2);
    const auto p = rng.homogeneous<MultiVector>(X, ga + gb, 2);
    CHECK(pairing(contract(alpha, p), beta) == pairing(p, wedge(alpha, beta)));
  }
}

TEST_CASE("Cartan formula against the coefficientwise Lie derivative") {
  oracle::Random rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    auto X = oracle::chart_x(static_cast<std::size_t>(rng.integer(2, 4)));
    const auto v = rng.homogeneous<MultiVector>(X, 1, 2, 4);
    const auto w = rng.homogeneous<DiffForm>(X, rng.integer(0, static_cast<int>(X->dim())), 2);
    oracle::Field field(X->dim(), RationalFunction(X));
    for (const auto& [m, c] : v.terms()) field[oracle::list_of(m)[0]] = c;
    CHECK(lie_derivative(v, w) == oracle::lie_form(field, w));
  }
}
