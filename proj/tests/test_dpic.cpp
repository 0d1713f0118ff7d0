#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "core/dpic.hpp"

using namespace wcert;
using dp::ConstantSheafSection;
using dp::DPicElement;
using dp::GroupDescription;
using ring::ArithmeticError;
using ring::FieldDesc;
using ring::PolyRing;
using ring::ProductRing;
using ring::RingAutomorphism;

namespace {
const PolyRing kF3{FieldDesc::prime(3), 1};

ProductRing two() { return ProductRing::power(kF3, 2); }

DPicElement elem(const ProductRing& base, std::vector<long> n, const RingAutomorphism& phi) {
  return DPicElement{ConstantSheafSection(base, std::move(n)), dp::PicClass::trivial(base), phi};
}
}  // namespace

TEST_CASE("constant sheaf sections") {
  auto base = two();
  ConstantSheafSection a(base, {1, -2}), b(base, {3, 5});
  CHECK((a + b).values == std::vector<long>{4, 3});
  CHECK((-a).values == std::vector<long>{-1, 2});
  CHECK(ConstantSheafSection::zero(base).values == std::vector<long>{0, 0});
  CHECK_THROWS_AS(ConstantSheafSection(base, {1}), ArithmeticError);
}

TEST_CASE("shift lowers the housing degree componentwise") {
  auto base = two();
  dp::DecomposedGradedModule m(base, {0, 0}, {1, 1});
  auto shifted = dp::shift(m, ConstantSheafSection(base, {1, 2}));
  CHECK(shifted.degrees == std::vector<long>{-1, -2});
  CHECK(shifted.ranks == m.ranks);
  CHECK_THROWS_AS(dp::DecomposedGradedModule(base, {0}, {1, 1}), ArithmeticError);
  CHECK_THROWS_AS(dp::DecomposedGradedModule(base, {0, 0}, {1, 0}), ArithmeticError);
}

TEST_CASE("automorphisms transport sections along the component permutation") {
  auto base = two();
  auto swap = RingAutomorphism::component_permutation(base, {1, 0});
  ConstantSheafSection n(base, {4, 7});
  auto [moved, pic] = dp::act(swap, n, dp::PicClass::trivial(base));
  CHECK(moved.values == std::vector<long>{7, 4});
  auto [fixed, _] = dp::act(RingAutomorphism::identity(base), n, dp::PicClass::trivial(base));
  CHECK(fixed.values == n.values);
}

TEST_CASE("composition and inverse on worked examples") {
  auto base = two();
  auto swap = RingAutomorphism::component_permutation(base, {1, 0});
  auto g = elem(base, {1, 0}, swap);
  // g * g = ((1, 1), id)
  auto sq = dp::dpic_compose(g, g);
  CHECK(sq.n.values == std::vector<long>{1, 1});
  CHECK(sq.phi.is_identity());
  // g^{-1} = ((0, -1), swap)
  auto gi = dp::dpic_inverse(g);
  CHECK(gi.n.values == std::vector<long>{0, -1});
  CHECK(gi.phi == swap);
  CHECK(dp::dpic_compose(g, gi) == dp::dpic_identity(base));
  CHECK(dp::dpic_compose(gi, g) == dp::dpic_identity(base));
}

TEST_CASE("group axioms hold on random elements") {
  auto base = ProductRing::power(kF3, 3);
  std::vector<RingAutomorphism> autos = {
      RingAutomorphism::identity(base),
      RingAutomorphism::component_permutation(base, {1, 2, 0}),
      RingAutomorphism::component_permutation(base, {2, 0, 1}),
      RingAutomorphism::component_permutation(base, {0, 2, 1}),
  };
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> vd(-5, 5);
  std::uniform_int_distribution<size_t> ad(0, autos.size() - 1);
  auto rand_elem = [&] {
    return elem(base, {vd(rng), vd(rng), vd(rng)}, autos[ad(rng)]);
  };
  auto e = dp::dpic_identity(base);
  for (int i = 0; i < 200; ++i) {
    auto a = rand_elem(), b = rand_elem(), c = rand_elem();
    CHECK(dp::dpic_compose(dp::dpic_compose(a, b), c) ==
          dp::dpic_compose(a, dp::dpic_compose(b, c)));
    CHECK(dp::dpic_compose(a, e) == a);
    CHECK(dp::dpic_compose(e, a) == a);
    CHECK(dp::dpic_compose(a, dp::dpic_inverse(a)) == e);
  }
}

TEST_CASE("group descriptions verify their tables") {
  GroupDescription::trivial_group().verify();
  auto c3 = GroupDescription::cyclic(3);
  c3.verify();
  CHECK(c3.finite_order() == 3);
  CHECK(c3.table[1 * 3 + 2] == 0);  // 1 + 2 = 0 mod 3

  auto broken = GroupDescription::cyclic(3);
  broken.table[1 * 3 + 2] = 1;  // no longer a group
  CHECK_THROWS_AS(broken.verify(), ArithmeticError);
}

TEST_CASE("local assembly: shifts times the outer group, torsion distinguishes") {
  auto g = dp::assemble_dpic_local(GroupDescription::cyclic(3));
  g.verify();
  CHECK(g.free_rank == 1);
  CHECK(g.finite_order() == 3);
  auto t = dp::torsion_part(g);
  CHECK(t.free_rank == 0);
  CHECK(t.finite_order() == 3);
  // two different outer groups stay distinguishable after assembly
  CHECK(!(dp::assemble_dpic_local(GroupDescription::cyclic(3)) ==
          dp::assemble_dpic_local(GroupDescription::cyclic(5))));
  CHECK(!(dp::torsion_part(dp::assemble_dpic_local(GroupDescription::trivial_group())) ==
          dp::torsion_part(dp::assemble_dpic_local(GroupDescription::cyclic(2)))));
}

TEST_CASE("non-surjectivity witnesses carry domain certificates") {
  auto ws = dp::non_surjectivity_witnesses(3, 1);
  REQUIRE(ws.size() == 2);  // one coset per parameter c != 1 in F_3^x
  for (const auto& w : ws) {
    CHECK(w.domain_certified);
    CHECK(w.domain_checks == 1000);
    CHECK(!w.coset_label.empty());
    CHECK(!w.justification.empty());
  }
  CHECK(ws[0].c != ws[1].c);
  CHECK(dp::non_surjectivity_witnesses(5, 1).size() == 4);
}
