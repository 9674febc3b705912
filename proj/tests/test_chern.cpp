#include "doctest.h"
#include "oracles.hpp"

using namespace pcalc;

namespace {

ChernElement one(const GradedRingModel& m) { return ChernElement(m, 1); }

ChernElement random_element(oracle::Random& rng, const GradedRingModel& m, Rational constant) {
  ChernElement e(m, constant);
  for (int t = 0; t < 4; ++t) {
    ChernElement mono(m, rng.coefficient());
    const int factors = rng.integer(1, 3);
    for (int f = 0; f < factors; ++f) {
      mono = mono * ChernElement::generator(m, static_cast<std::size_t>(rng.integer(0, static_cast<int>(m.generator_count()) - 1)));
    }
    e += mono;
  }
  return e;
}

std::vector<ChernElement> random_classes(oracle::Random& rng, const GradedRingModel& m) {
  std::vector<ChernElement> cs;
  for (int i = 1; i <= m.truncation; ++i) cs.push_back(random_element(rng, m, 0).component(i));
  return cs;
}

}  // namespace

TEST_CASE("truncated arithmetic") {
  const auto p4 = GradedRingModel::projective(4);
  const ChernElement h = ChernElement::generator(p4, 0);
  CHECK((h * h * h * h * h).is_zero());
  CHECK(to_string(h * h * h * h) == "h^4");

  const auto f4 = GradedRingModel::free_chern(4);
  const ChernElement c1 = ChernElement::generator(f4, 0);
  const ChernElement prod = (one(f4) + c1) * (one(f4) - c1 + c1 * c1 - c1 * c1 * c1);
  CHECK(prod == one(f4) - c1 * c1 * c1 * c1);

  oracle::Random rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const ChernElement a = random_element(rng, f4, rng.coefficient());
    const ChernElement b = random_element(rng, f4, rng.coefficient());
    CHECK(a * b == b * a);
  }
  CHECK_THROWS_AS(h + c1, Error);
}

TEST_CASE("series inverse") {
  const auto f4 = GradedRingModel::free_chern(4);
  const ChernElement c1 = ChernElement::generator(f4, 0);
  CHECK(series_inverse(one(f4) + c1) == one(f4) - c1 + c1 * c1 - c1 * c1 * c1 + c1 * c1 * c1 * c1);
  CHECK(series_inverse(one(f4)) == one(f4));
  CHECK_THROWS_AS(series_inverse(ChernElement(f4, 2)), Error);

  oracle::Random rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = rng.integer(0, 1) ? GradedRingModel::free_chern(rng.integer(1, 5))
                                     : GradedRingModel::projective(rng.integer(1, 6));
    const ChernElement a = random_element(rng, m, 1);
    CHECK(a * series_inverse(a) == one(m));
    CHECK(series_inverse(a) * a == one(m));
  }
}

TEST_CASE("projective presets") {
  const auto p4 = GradedRingModel::projective(4);
  const auto cs = chern_classes(p4);
  REQUIRE(cs.size() == 4);
  CHECK(to_string(cs[0]) == "5*h");
  CHECK(to_string(cs[1]) == "10*h^2");
  CHECK(to_string(cs[2]) == "10*h^3");
  CHECK(to_string(cs[3]) == "5*h^4");
  CHECK(to_string(cotangent_total_chern(cs)) == "1 - 5*h + 10*h^2 - 10*h^3 + 5*h^4");
}

TEST_CASE("cotangent classes") {
  const auto f5 = GradedRingModel::free_chern(5);
  const auto cs = chern_classes(f5);
  const ChernElement c = cotangent_total_chern(cs);
  CHECK(c.component(1) == -cs[0]);
  CHECK(c.component(2) == cs[1]);
  CHECK(c.component(3) == -cs[2]);
  std::vector<ChernElement> zeros(4, ChernElement(GradedRingModel::free_chern(4), 0));
  CHECK(cotangent_total_chern(zeros) == one(GradedRingModel::free_chern(4)));

  const ChernElement d = divisor_cotangent_chern(cs);
  CHECK(d.component(1).is_zero());
  CHECK(d.component(2) == cs[1]);
  CHECK(d.component(3) == cs[0] * cs[1] - cs[2]);
}

TEST_CASE("divisor cotangent is Calabi-Yau for random classes") {
  oracle::Random rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = GradedRingModel::free_chern(rng.integer(2, 5));
    CHECK(divisor_cotangent_chern(random_classes(rng, m)).component(1).is_zero());
  }
}

TEST_CASE("obstruction") {
  const auto f4 = GradedRingModel::free_chern(4);
  const auto cs = chern_classes(f4);
  CHECK(obstruction(cs) == cs[0] * cs[0] * cs[1] - cs[0] * cs[2]);
  CHECK(to_string(obstruction(cs)) == "c1^2*c2 - c1*c3");

  const auto p4 = chern_classes(GradedRingModel::projective(4));
  const ChernElement h = ChernElement::generator(GradedRingModel::projective(4), 0);
  CHECK(obstruction(p4) == (h * h * h * h).scaled(200));

  for (int n = 1; n <= 3; ++n) {
    CHECK_THROWS_AS(obstruction(chern_classes(GradedRingModel::projective(n))), Error);
  }
  CHECK_FALSE(obstruction(chern_classes(GradedRingModel::projective(5))).is_zero());

  oracle::Random rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    auto classes = random_classes(rng, GradedRingModel::free_chern(rng.integer(4, 6)));
    classes[0] = ChernElement(classes[0].model(), 0);
    CHECK(obstruction(classes).is_zero());
  }
}
