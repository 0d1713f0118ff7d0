#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/polymatrix.hpp"
#include "core/ring_automorphism.hpp"
#include "core/weyl.hpp"

namespace wcert::az {

using ring::MultiPoly;
using ring::PolyMatrix;
using ring::PolyRing;
using ring::RingAutomorphism;

/// A coordinate vector over the base ring: basis index -> coefficient,
/// zero coefficients never stored.
using Coord = std::map<unsigned, MultiPoly>;

/// A finite free algebra over a commutative polynomial ring, presented by
/// structure constants on a fixed basis b_1..b_r.  Construction verifies the
/// unit laws; associativity is verified by `verify_associativity` (full sweep
/// for small ranks, sampled for large ones) which every factory below runs.
class FreeAlgebra {
 public:
  FreeAlgebra(PolyRing base, unsigned rank, std::vector<Coord> structure, Coord unit,
              std::vector<std::string> basis_labels = {});

  [[nodiscard]] const PolyRing& base() const { return base_; }
  [[nodiscard]] unsigned rank() const { return rank_; }
  [[nodiscard]] const Coord& unit() const { return unit_; }
  [[nodiscard]] const Coord& sc(unsigned i, unsigned j) const {
    return structure_[static_cast<size_t>(i) * rank_ + j];
  }
  [[nodiscard]] const std::string& basis_label(unsigned i) const { return labels_[i]; }

  [[nodiscard]] Coord basis_element(unsigned i) const;
  [[nodiscard]] Coord zero() const { return {}; }

  [[nodiscard]] Coord add(const Coord& a, const Coord& b) const;
  [[nodiscard]] Coord sub(const Coord& a, const Coord& b) const;
  [[nodiscard]] Coord scale(const Coord& a, const MultiPoly& c) const;
  [[nodiscard]] Coord mul(const Coord& a, const Coord& b) const;
  [[nodiscard]] Coord pow(const Coord& a, unsigned e) const;

  /// Unit laws on every basis element; throws on violation.
  void verify_unit() const;
  /// (b_i b_j) b_k = b_i (b_j b_k).  Exhaustive when rank^3 <= budget,
  /// otherwise a seeded random sample of `samples` triples.  Throws on
  /// violation.
  void verify_associativity(size_t budget = 200'000, size_t samples = 2000,
                            unsigned seed = 0) const;

  bool operator==(const FreeAlgebra& o) const;

 private:
  PolyRing base_;
  unsigned rank_;
  std::vector<Coord> structure_;  // rank*rank entries
  Coord unit_;
  std::vector<std::string> labels_;
};

using FreeAlgebraPtr = std::shared_ptr<const FreeAlgebra>;

/// A_n(F_p) as a free module of rank p^{2n} over its center F_p[z_1..z_{2n}]
/// on the basis {x^e : 0 <= e < p}; structure constants come from PBW
/// multiplication followed by central-coordinate extraction.
FreeAlgebraPtr weyl_structure_constants(long p, unsigned n);

/// M_m(R) on the elementary-matrix basis E_ab, E_ab E_cd = delta_bc E_ad.
FreeAlgebraPtr matrix_algebra(unsigned m, const PolyRing& base);

/// Componentwise tensor product over the common base ring.
FreeAlgebraPtr tensor_over_R(const FreeAlgebraPtr& a, const FreeAlgebraPtr& b);

/// Same basis, transposed structure constants.
FreeAlgebraPtr opposite(const FreeAlgebraPtr& a);

/// The algebra A with base-ring action twisted through the automorphism:
/// structure constants and unit coordinates are rewritten by the inverse
/// substitution.
FreeAlgebraPtr pushforward(const FreeAlgebraPtr& a, const RingAutomorphism& phi);

/// The r^2 x r^2 matrix of b_i (x) b_j |-> (a |-> b_i a b_j); rows indexed by
/// endomorphism matrix slots (s,t), columns by (i,j), both row-major.
PolyMatrix action_map_matrix(const FreeAlgebra& a);

struct AzumayaCertificate {
  bool azumaya = false;
  MultiPoly determinant;
  std::vector<std::string> strategies_run;
  bool cross_checked = false;
};

/// True iff the action map has unit determinant.
AzumayaCertificate azumaya_check(const FreeAlgebra& a, const ring::DetOptions& opts = {});

/// A homomorphism candidate given by basis images in the target.
struct AlgebraHom {
  FreeAlgebraPtr source;
  FreeAlgebraPtr target;
  std::vector<Coord> images;  // one per source basis element
};

struct HomVerdict {
  bool is_hom = false;
  bool is_iso = false;
  std::string failure;  // first violated law, empty when is_hom
  MultiPoly det;        // coordinate-matrix determinant (when computed)
};

/// Verifies multiplicativity on all basis pairs and unit preservation;
/// is_iso additionally requires equal ranks and a unit coordinate
/// determinant.
HomVerdict check_hom(const AlgebraHom& h, const ring::DetOptions& det_opts = {});

/// The faithful representation of the rank-p^2 algebra on two generators
/// t (multiplication) and d (differentiation) acting on F_p[t]/(t^p):
/// basis t^a d^b maps to the corresponding matrix product.  Returns the hom
/// together with the generator matrices.
struct DiffOpRepresentation {
  FreeAlgebraPtr source;     // rank p^2 over F_p, basis lower^a upper^b
  FreeAlgebraPtr target;     // M_p(F_p)
  AlgebraHom hom;
  HomVerdict verdict;
  /// E_ab expressed in the source basis: preimages[a*p+b] satisfies
  /// hom(preimages[a*p+b]) = E_ab.
  std::vector<Coord> preimages;
};

DiffOpRepresentation diffop_representation(long p);

}  // namespace wcert::az
