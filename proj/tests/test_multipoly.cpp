#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "core/multipoly.hpp"

using namespace wcert::ring;

namespace {
const PolyRing kF3z2{FieldDesc::prime(3), 2};
const PolyRing kQx3{FieldDesc::rationals(), 3};

MultiPoly random_poly(const PolyRing& ring, std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<unsigned> ed(0, 3);
  std::uniform_int_distribution<long> cd(-5, 5);
  MultiPoly f(ring);
  for (int t = 0; t < terms; ++t) {
    Expo e(ring.nvars);
    for (auto& x : e) x = ed(rng);
    f.add_term(e, Scalar::from_int(ring.field, cd(rng)));
  }
  return f;
}
}  // namespace

TEST_CASE("graded-lex order: total degree first, then lexicographic") {
  GrlexGreater gt;
  CHECK(gt({2, 0}, {1, 0}));        // higher degree wins
  CHECK(gt({1, 1}, {2, 0}) == false);  // same degree: lex on (2,0) > (1,1)
  CHECK(gt({2, 0}, {1, 1}));
  CHECK(gt({0, 3}, {1, 1}));
  CHECK(!gt({1, 1}, {1, 1}));
}

TEST_CASE("canonical printing") {
  MultiPoly f(kF3z2);
  f.add_term({2, 1}, Scalar::from_int(kF3z2.field, 2));
  f.add_term({0, 0}, Scalar::from_int(kF3z2.field, 1));
  f.add_term({1, 0}, Scalar::from_int(kF3z2.field, 1));
  CHECK(f.to_string() == "2*z1^2*z2 + z1 + 1");
  CHECK(MultiPoly::zero(kF3z2).to_string() == "0");
  CHECK(MultiPoly::one(kF3z2).to_string() == "1");
  CHECK(MultiPoly::variable(kF3z2, 1).to_string() == "z2");
  CHECK(MultiPoly::variable(kF3z2, 1).to_string("u") == "u2");
}

TEST_CASE("arithmetic identities on random polynomials") {
  std::mt19937 rng(1);
  for (const auto& ring : {kF3z2, kQx3}) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_poly(ring, rng), g = random_poly(ring, rng), h = random_poly(ring, rng);
      CHECK((f + g) * h == f * h + g * h);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f - f == MultiPoly::zero(ring));
      CHECK(f * MultiPoly::one(ring) == f);
      CHECK(f.pow(3) == f * f * f);
    }
  }
}

TEST_CASE("cancellation never leaves zero terms behind") {
  MultiPoly f(kF3z2);
  f.add_term({1, 1}, Scalar::from_int(kF3z2.field, 2));
  f.add_term({1, 1}, Scalar::from_int(kF3z2.field, 1));  // 2 + 1 = 0 mod 3
  CHECK(f.is_zero());
  CHECK(f.term_count() == 0);
}

TEST_CASE("unit detection") {
  CHECK(MultiPoly::constant(kF3z2, 2).is_unit());
  CHECK(!MultiPoly::zero(kF3z2).is_unit());
  CHECK(!MultiPoly::variable(kF3z2, 0).is_unit());
  CHECK((MultiPoly::variable(kF3z2, 0) + MultiPoly::one(kF3z2)).is_unit() == false);
}

TEST_CASE("exact division succeeds exactly on multiples") {
  std::mt19937 rng(2);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(kQx3, rng);
    auto g = random_poly(kQx3, rng);
    if (g.is_zero()) continue;
    CHECK((f * g).exact_div(g) == f);
  }
  auto x = MultiPoly::variable(kQx3, 0), y = MultiPoly::variable(kQx3, 1);
  // x^2 - y^2 = (x - y)(x + y)
  CHECK((x * x - y * y).exact_div(x - y) == x + y);
  CHECK_THROWS_AS((x * x + y).exact_div(x - y), ArithmeticError);
  CHECK_THROWS_AS(x.exact_div(MultiPoly::zero(kQx3)), ArithmeticError);
}

TEST_CASE("substitution and evaluation agree") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> cd(-4, 4);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(kQx3, rng);
    std::vector<Scalar> point;
    std::vector<MultiPoly> images;
    for (unsigned v = 0; v < 3; ++v) {
      long c = cd(rng);
      point.push_back(Scalar::from_int(kQx3.field, c));
      images.push_back(MultiPoly::constant(kQx3, c));
    }
    CHECK(f.substitute(images).constant_value() == f.evaluate(point));
  }
}

TEST_CASE("substitution composes ring maps") {
  auto x = MultiPoly::variable(kF3z2, 0), y = MultiPoly::variable(kF3z2, 1);
  auto f = x * x + y;
  std::vector<MultiPoly> images = {y, x + y};  // x -> y, y -> x + y
  CHECK(f.substitute(images) == y * y + x + y);
}

TEST_CASE("extension field evaluation matches prime-subfield evaluation") {
  const auto& gf = GFField::get(3, 2);
  std::mt19937 rng(4);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(kF3z2, rng);
    std::uniform_int_distribution<unsigned> pd(0, 2);
    std::vector<unsigned> raw = {pd(rng), pd(rng)};
    std::vector<Scalar> point = {Scalar::from_int(kF3z2.field, raw[0]),
                                 Scalar::from_int(kF3z2.field, raw[1])};
    CHECK(f.evaluate_gf(gf, raw) == static_cast<unsigned>(f.evaluate(point).residue()));
  }
}

TEST_CASE("finite field tables satisfy the field axioms") {
  for (auto [p, k] : {std::pair<long, unsigned>{3, 2}, {3, 5}, {5, 3}, {7, 2}}) {
    const auto& gf = GFField::get(p, k);
    const unsigned q = gf.size();
    std::mt19937 rng(5);
    std::uniform_int_distribution<unsigned> pick(0, q - 1);
    for (int i = 0; i < 300; ++i) {
      unsigned a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(gf.add(a, gf.add(b, c)) == gf.add(gf.add(a, b), c));
      CHECK(gf.mul(a, gf.mul(b, c)) == gf.mul(gf.mul(a, b), c));
      CHECK(gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c)));
      CHECK(gf.add(a, gf.neg(a)) == 0);
      if (a != 0) {
        CHECK(gf.mul(a, gf.inv(a)) == 1);
        CHECK(gf.pow(a, static_cast<long>(q) - 1) == 1);
      }
    }
    // prime subfield embedding is additive and multiplicative
    const auto up = static_cast<unsigned>(p);
    for (unsigned a = 0; a < up; ++a)
      for (unsigned b = 0; b < up; ++b) {
        CHECK(gf.add(a, b) == (a + b) % up);
        CHECK(gf.mul(a, b) == (a * b) % up);
      }
  }
  CHECK(GFField::with_size_above(3, 100).size() == 243);
  CHECK(GFField::with_size_above(3, 2).size() == 3);
  CHECK_THROWS_AS(GFField::with_size_above(3, 7000), ArithmeticError);
}
