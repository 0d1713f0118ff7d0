#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "core/scalar.hpp"

using namespace wcert::ring;

TEST_CASE("field descriptor factories validate their input") {
  CHECK_THROWS_AS(FieldDesc::prime(4), ArithmeticError);
  CHECK_THROWS_AS(FieldDesc::prime(1), ArithmeticError);
  CHECK_THROWS_AS(FieldDesc::quadratic(0), ArithmeticError);
  CHECK_THROWS_AS(FieldDesc::quadratic(1), ArithmeticError);
  CHECK_THROWS_AS(FieldDesc::quadratic(4), ArithmeticError);   // not squarefree
  CHECK_THROWS_AS(FieldDesc::quadratic(12), ArithmeticError);  // 4 | 12
  CHECK(FieldDesc::prime(3).characteristic() == 3);
  CHECK(FieldDesc::rationals().characteristic() == 0);
  CHECK(FieldDesc::quadratic(2).d == 2);
  CHECK(FieldDesc::quadratic(-1).d == -1);
}

TEST_CASE("prime field arithmetic") {
  auto f = FieldDesc::prime(7);
  auto a = Scalar::from_int(f, 5), b = Scalar::from_int(f, 4);
  CHECK((a + b).residue() == 2);
  CHECK((a * b).residue() == 6);
  CHECK((a - b).residue() == 1);
  CHECK((-a).residue() == 2);
  CHECK(a.inverse().residue() == 3);  // 5 * 3 = 15 = 1 mod 7
  CHECK(a.pow(-1).residue() == 3);
  CHECK(a.pow(6).residue() == 1);  // Fermat
  CHECK(Scalar::from_int(f, -3).residue() == 4);
  CHECK_THROWS_AS(Scalar::zero(f).inverse(), ArithmeticError);
}

TEST_CASE("rational arithmetic stays exact") {
  auto half = Scalar::rational(Rat(1, 2));
  auto third = Scalar::rational(Rat(1, 3));
  CHECK((half + third) == Scalar::rational(Rat(5, 6)));
  CHECK((half * third) == Scalar::rational(Rat(1, 6)));
  CHECK(half.inverse() == Scalar::rational(Rat(2)));
  CHECK(half.pow(-2) == Scalar::rational(Rat(4)));
}

TEST_CASE("quadratic field arithmetic and conjugation") {
  auto x = Scalar::quadratic(2, Rat(1), Rat(1));   // 1 + sqrt 2
  auto y = Scalar::quadratic(2, Rat(1), Rat(-1));  // 1 - sqrt 2
  CHECK(x * y == Scalar::quadratic(2, Rat(-1), Rat(0)));  // norm = 1 - 2
  CHECK(x.conjugate() == y);
  CHECK(x + y == Scalar::quadratic(2, Rat(2), Rat(0)));
  // (1 + sqrt 2)^{-1} = sqrt 2 - 1
  CHECK(x.inverse() == Scalar::quadratic(2, Rat(-1), Rat(1)));
  CHECK(x * x.inverse() == Scalar::one(FieldDesc::quadratic(2)));
}

TEST_CASE("real embedding signs are exact") {
  auto x = Scalar::quadratic(2, Rat(1), Rat(-1));  // 1 - sqrt 2 < 0 < 1 + sqrt 2
  auto [pos, neg] = x.real_embedding_signs();
  CHECK(pos == Sign::Negative);
  CHECK(neg == Sign::Positive);
  // 3 - 2 sqrt 2 = (sqrt 2 - 1)^2 > 0 under both embeddings
  auto sq = Scalar::quadratic(2, Rat(3), Rat(-2));
  auto [p2, n2] = sq.real_embedding_signs();
  CHECK(p2 == Sign::Positive);
  CHECK(n2 == Sign::Positive);
  auto [pz, nz] = Scalar::zero(FieldDesc::quadratic(2)).real_embedding_signs();
  CHECK(pz == Sign::Zero);
  CHECK(nz == Sign::Zero);
  // 2 - sqrt 2 vs sqrt 2 - 2: tight cases near the irrational boundary
  auto t = Scalar::quadratic(2, Rat(2), Rat(-1));
  CHECK(t.real_embedding_signs().first == Sign::Positive);
  // imaginary quadratic fields have no real embeddings
  CHECK_THROWS_AS(Scalar::quadratic(-1, Rat(1), Rat(1)).real_embedding_signs(), ArithmeticError);
}

TEST_CASE("scalars from different fields refuse to combine") {
  auto a = Scalar::from_int(FieldDesc::prime(3), 1);
  auto b = Scalar::from_int(FieldDesc::prime(5), 1);
  CHECK_THROWS_AS(a + b, ArithmeticError);
  CHECK_THROWS_AS(a * Scalar::rational(Rat(1)), ArithmeticError);
}

TEST_CASE("field axioms hold on random samples") {
  std::mt19937 rng(0);
  std::uniform_int_distribution<long> pick(-30, 30);
  auto fields = {FieldDesc::prime(7), FieldDesc::rationals(), FieldDesc::quadratic(2)};
  for (const auto& f : fields) {
    auto rand_scalar = [&] {
      if (f.kind == FieldKind::Quadratic)
        return Scalar::quadratic(f.d, Rat(pick(rng), 7), Rat(pick(rng), 5));
      return Scalar::from_int(f, pick(rng));
    };
    for (int i = 0; i < 200; ++i) {
      auto a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("primality and squarefree helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));  // 7 * 13
  CHECK(is_squarefree(30));
  CHECK(!is_squarefree(18));
}
