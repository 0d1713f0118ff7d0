#pragma once

#include "core/product_ring.hpp"

namespace wcert::ring {

/// A verified automorphism of a ProductRing.  Stores both the forward map and
/// a claimed inverse; construction checks that the two compositions fix every
/// generator (coordinate variables, and the quadratic-field conjugation flag)
/// and rejects the pair otherwise.
///
/// Data per source component lambda: a target component perm[lambda], an
/// optional coefficient-field conjugation (quadratic fields only), and one
/// image polynomial per coordinate variable, written in the target
/// component's ring.
class RingAutomorphism {
 public:
  struct ComponentMap {
    bool conjugate = false;
    std::vector<MultiPoly> images;
  };

  /// Builds and verifies.  `inv_perm`/`inv_maps` describe the claimed inverse.
  RingAutomorphism(ProductRing base, std::vector<unsigned> perm, std::vector<ComponentMap> fwd,
                   std::vector<ComponentMap> inv);

  static RingAutomorphism identity(const ProductRing& base);
  /// Pure component permutation lambda -> perm[lambda]; permuted components
  /// must have identical rings.
  static RingAutomorphism component_permutation(const ProductRing& base,
                                                std::vector<unsigned> perm);
  /// Single-component automorphism from explicit forward and inverse
  /// coordinate images.
  static RingAutomorphism from_images(const PolyRing& ring, std::vector<MultiPoly> fwd_images,
                                      std::vector<MultiPoly> inv_images);
  /// The nontrivial element of Aut(Q(sqrt d)): conjugation of coefficients.
  static RingAutomorphism quadratic_conjugation(long d);

  [[nodiscard]] const ProductRing& base() const { return base_; }
  [[nodiscard]] const std::vector<unsigned>& perm() const { return perm_; }
  [[nodiscard]] const std::vector<ComponentMap>& forward_maps() const { return fwd_; }

  /// Image of a ring element under the forward (resp. inverse) map.
  [[nodiscard]] ProductElement apply(const ProductElement& x) const;
  [[nodiscard]] ProductElement apply_inverse(const ProductElement& x) const;
  /// Single-component convenience: image of a polynomial.
  [[nodiscard]] MultiPoly apply_poly(const MultiPoly& f) const;
  [[nodiscard]] MultiPoly apply_inverse_poly(const MultiPoly& f) const;

  /// this after other.
  [[nodiscard]] RingAutomorphism compose(const RingAutomorphism& other) const;
  [[nodiscard]] RingAutomorphism inverse() const;

  [[nodiscard]] bool is_identity() const;
  bool operator==(const RingAutomorphism& o) const;

 private:
  ProductRing base_;
  std::vector<unsigned> perm_;      // source component -> target component
  std::vector<unsigned> inv_perm_;
  std::vector<ComponentMap> fwd_;   // indexed by source component
  std::vector<ComponentMap> inv_;   // indexed by source component of the inverse map

  [[nodiscard]] MultiPoly transform(const ComponentMap& cm, const PolyRing& target,
                                    const MultiPoly& f) const;
  void verify() const;
};

}  // namespace wcert::ring
