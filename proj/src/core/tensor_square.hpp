#pragma once

#include "core/weyl.hpp"

namespace wcert::weyl {

/// The tensor square of the Weyl algebra over its center, viewed inside the
/// double-size Weyl algebra: generators x_i of the first factor and y_i of
/// the second factor embed as commuting-across-factors generators of
/// A_{2n}(F_p), and the identification x_i^p = y_i^p (both mapping to the
/// central coordinate z_i) is applied by an explicit reduction.
///
/// Twists: the two factors may carry pushforwards by the central scaling
/// automorphisms with parameters c and c' respectively, in which case the
/// central coordinate z_i is identified with c^{-omega_i} x_i^p and
/// c'^{-omega_i} y_i^p (omega_i = 1 on the upper half of the indices).
class TensorSquareContext {
 public:
  TensorSquareContext(long p, unsigned n, long c = 1, long cprime = 1);

  [[nodiscard]] long p() const { return small_->p(); }
  [[nodiscard]] unsigned n() const { return small_->n(); }
  [[nodiscard]] long c() const { return c_; }
  [[nodiscard]] long cprime() const { return cprime_; }
  [[nodiscard]] const WeylContextPtr& carrier() const { return big_; }
  [[nodiscard]] const WeylContextPtr& factor() const { return small_; }
  /// The common central ring F_p[z_1..z_{2n}].
  [[nodiscard]] const PolyRing& center() const { return small_->center(); }

  /// Embedded generators of the two factors (0-based i in [0, 2n)).
  [[nodiscard]] WeylElement x(unsigned i) const;
  [[nodiscard]] WeylElement y(unsigned i) const;

  /// Carrier index of x_i resp. y_i.
  [[nodiscard]] unsigned x_index(unsigned i) const;
  [[nodiscard]] unsigned y_index(unsigned i) const;

 private:
  WeylContextPtr small_;
  WeylContextPtr big_;
  long c_, cprime_;
};

/// An element of the tensor square written on the free basis
/// {x^a y^b : 0 <= a, b < p} with coefficients in the center: the result of
/// reducing a carrier element modulo the central identification.
struct ReducedTensor {
  /// reduced carrier exponent (length 4n, entries < p) -> central coefficient
  std::map<Expo, MultiPoly, GrlexGreater> coords;

  [[nodiscard]] bool is_zero() const { return coords.empty(); }
  bool operator==(const ReducedTensor&) const = default;

  /// The central polynomial when the element is purely central (basis
  /// exponent zero); throws otherwise.
  [[nodiscard]] MultiPoly central_value(const TensorSquareContext& ctx) const;

  [[nodiscard]] std::string to_string() const;
};

/// Reduces a carrier element: splits off p-th powers of each carrier
/// generator and identifies them with (twist-scaled) central coordinates.
ReducedTensor reduce_tensor(const TensorSquareContext& ctx, const WeylElement& f);

}  // namespace wcert::weyl
