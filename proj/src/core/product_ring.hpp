#pragma once

#include <vector>

#include "core/multipoly.hpp"

namespace wcert::ring {

/// A finite product of polynomial rings (one factor per connected component
/// of the spectrum).  Elements are tuples of component elements.
struct ProductRing {
  std::vector<PolyRing> components;

  [[nodiscard]] size_t component_count() const { return components.size(); }
  bool operator==(const ProductRing&) const = default;

  static ProductRing single(const PolyRing& r) { return ProductRing{{r}}; }
  static ProductRing power(const PolyRing& r, size_t count) {
    return ProductRing{std::vector<PolyRing>(count, r)};
  }
};

/// A tuple element of a ProductRing.
struct ProductElement {
  std::vector<MultiPoly> parts;

  bool operator==(const ProductElement&) const = default;
};

ProductElement product_one(const ProductRing& r);
ProductElement product_zero(const ProductRing& r);
ProductElement product_mul(const ProductElement& a, const ProductElement& b);
ProductElement product_add(const ProductElement& a, const ProductElement& b);

/// The canonical orthogonal idempotents e_lambda = (0,..,1,..,0).
/// Pairwise products are zero and the sum is 1; both are re-verified on each
/// call before returning.
std::vector<ProductElement> component_idempotents(const ProductRing& r);

}  // namespace wcert::ring
