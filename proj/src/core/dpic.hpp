#pragma once

#include <string>
#include <vector>

#include "core/ring_automorphism.hpp"

namespace wcert::dp {

using ring::ProductRing;
using ring::RingAutomorphism;

/// A section of the constant integer sheaf: one integer per connected
/// component of the base.
struct ConstantSheafSection {
  ProductRing base;
  std::vector<long> values;

  ConstantSheafSection(ProductRing b, std::vector<long> v);
  static ConstantSheafSection zero(const ProductRing& b);

  ConstantSheafSection operator+(const ConstantSheafSection& o) const;
  ConstantSheafSection operator-() const;
  bool operator==(const ConstantSheafSection&) const = default;
};

/// A Picard class of the base.  Every base in scope has trivial Picard group,
/// so only the trivial class is constructible; the type exists to keep the
/// group-law bookkeeping honest.
struct PicClass {
  ProductRing base;
  bool operator==(const PicClass&) const = default;
  static PicClass trivial(const ProductRing& b) { return PicClass{b}; }
};

/// An element of the derived Picard group presented as (section, Picard
/// class, automorphism) with a cocycle handle.  Only the trivial cocycle
/// ships; the handle exists as the extension point for a nontrivial one.
struct DPicElement {
  ConstantSheafSection n;
  PicClass pic;
  RingAutomorphism phi;
  std::string cocycle = "trivial";

  bool operator==(const DPicElement& o) const;
};

/// A graded module that decomposes over the components: per component one
/// housing degree and one positive rank.
struct DecomposedGradedModule {
  ProductRing base;
  std::vector<long> degrees;
  std::vector<unsigned> ranks;

  DecomposedGradedModule(ProductRing b, std::vector<long> d, std::vector<unsigned> r);
  bool operator==(const DecomposedGradedModule&) const = default;
};

/// An abstract group: a free rank plus a finite part given by an explicit
/// multiplication table.  `verify` checks the table axioms (closure,
/// identity at index 0, inverses, associativity).
struct GroupDescription {
  unsigned free_rank = 0;
  std::vector<std::string> labels;  // finite part; element 0 is the identity
  std::vector<unsigned> table;      // row-major: table[i*s + j] = index of product

  [[nodiscard]] size_t finite_order() const { return labels.size(); }
  void verify() const;  // throws on any axiom violation
  bool operator==(const GroupDescription&) const = default;

  static GroupDescription trivial_group();
  static GroupDescription cyclic(unsigned m);
};

/// Componentwise shift: degree d -> d - n (the one-step shift lowers the
/// housing degree by one).
DecomposedGradedModule shift(const DecomposedGradedModule& m, const ConstantSheafSection& n);

/// Action of an automorphism on (section, Picard class): the section is
/// transported along the component permutation, the trivial class stays
/// trivial.
std::pair<ConstantSheafSection, PicClass> act(const RingAutomorphism& phi,
                                              const ConstantSheafSection& n, const PicClass& l);

DPicElement dpic_identity(const ProductRing& base);

/// Semidirect-product composition: (n1 + phi1.n2, L1 (x) phi1_*L2, phi1 o
/// phi2); the trivial cocycle contributes nothing.
DPicElement dpic_compose(const DPicElement& g1, const DPicElement& g2);

/// Group inverse; both composition identities are re-verified before
/// returning.
DPicElement dpic_inverse(const DPicElement& g);

/// The derived Picard group of a local (connected, trivial-Picard) base:
/// free rank 1 (the shifts) times the supplied outer-automorphism group.
GroupDescription assemble_dpic_local(const GroupDescription& outer);

/// The subgroup of torsion elements: the finite part.
GroupDescription torsion_part(const GroupDescription& g);

/// One witness per parameter value c != 1: the scaling automorphism with
/// parameter c does not stabilize the Brauer class of the Weyl algebra, so
/// its coset in the automorphism group is distinct from the stabilizer.
/// Distinctness rests on a machine-checked domain certificate (random
/// leading-term multiplicativity checks) plus the recorded zero-divisor
/// deduction.
struct NonSurjectivityWitness {
  long c = 0;
  std::string coset_label;
  std::string justification;
  bool domain_certified = false;
  unsigned domain_checks = 0;
};

std::vector<NonSurjectivityWitness> non_surjectivity_witnesses(long p, unsigned n,
                                                               unsigned domain_checks = 1000,
                                                               unsigned seed = 0);

}  // namespace wcert::dp
