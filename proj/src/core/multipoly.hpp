#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "core/gf.hpp"
#include "core/scalar.hpp"

namespace wcert::ring {

/// Exponent tuple of a monomial; length equals the ring's variable count.
using Expo = std::vector<unsigned>;

/// Graded-lexicographic "greater than", the one canonical term order used
/// throughout: higher total degree first, ties broken lexicographically.
struct GrlexGreater {
  bool operator()(const Expo& a, const Expo& b) const;
};

/// Descriptor of a commutative polynomial ring k[v_1..v_m] over an exact
/// coefficient field.  m = 0 describes the field itself.
struct PolyRing {
  FieldDesc field;
  unsigned nvars = 0;
  bool operator==(const PolyRing&) const = default;
  [[nodiscard]] std::string name() const;
};

/// A sparse multivariate polynomial.  Invariant: no zero coefficients are
/// stored, so structural equality is semantic equality.  Immutable in spirit;
/// all operations return fresh values.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(const PolyRing& ring) : ring_(ring) {}

  static MultiPoly zero(const PolyRing& ring) { return MultiPoly(ring); }
  static MultiPoly constant(const PolyRing& ring, const Scalar& c);
  static MultiPoly constant(const PolyRing& ring, long c);
  static MultiPoly one(const PolyRing& ring) { return constant(ring, 1); }
  /// The variable v_i (0-based).
  static MultiPoly variable(const PolyRing& ring, unsigned i);
  static MultiPoly monomial(const PolyRing& ring, const Expo& e, const Scalar& c);

  [[nodiscard]] const PolyRing& ring() const { return ring_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// True iff a nonzero constant.
  [[nodiscard]] bool is_unit() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] unsigned total_degree() const;  // 0 for the zero polynomial
  [[nodiscard]] size_t term_count() const { return terms_.size(); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Scalar& c) const;
  [[nodiscard]] MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Exact division; throws ArithmeticError when o does not divide this
  /// exactly (used by the fraction-free determinant).
  [[nodiscard]] MultiPoly exact_div(const MultiPoly& o) const;

  /// Leading term under graded-lex.  Zero polynomial has no leading term.
  [[nodiscard]] std::pair<Expo, Scalar> leading_term() const;

  /// Simultaneous substitution v_i -> images[i]; images live in a common ring.
  [[nodiscard]] MultiPoly substitute(std::span<const MultiPoly> images) const;

  /// Evaluation at scalars of the coefficient field.
  [[nodiscard]] Scalar evaluate(std::span<const Scalar> point) const;

  /// Evaluation at points of an extension field of F_p (prime-field
  /// coefficients only).  Exponents are reduced via the field's multiplicative
  /// structure; exact.
  [[nodiscard]] unsigned evaluate_gf(const GFField& gf, std::span<const unsigned> point) const;

  /// As a scalar; requires is_zero() or a constant polynomial.
  [[nodiscard]] Scalar constant_value() const;

  /// Canonical printing: terms in graded-lex descending order, each
  /// `c*v1^a1*...` with zero exponents omitted.
  [[nodiscard]] std::string to_string(const std::string& var_prefix = "z") const;

  [[nodiscard]] const std::map<Expo, Scalar, GrlexGreater>& terms() const { return terms_; }

  /// Adds c * v^e in place, dropping the term if it cancels.  The one
  /// mutating entry point, used by the arithmetic above and by builders.
  void add_term(const Expo& e, const Scalar& c);

 private:
  PolyRing ring_{FieldDesc::rationals(), 0};
  std::map<Expo, Scalar, GrlexGreater> terms_;

  void require_same_ring(const MultiPoly& o) const;
};

}  // namespace wcert::ring
