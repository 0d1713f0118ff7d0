#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/free_algebra.hpp"
#include "core/tensor_square.hpp"

namespace wcert::br {

using ring::FieldDesc;
using ring::Scalar;

/// A Brauer class the engine can do exact arithmetic on: either a member of
/// the omega family over the center of a Weyl algebra (parameter c in F_p,
/// c = 0 being the trivial class represented by the matrix algebra), or a
/// quaternion class (a, b) over a number field.
struct BrauerClass {
  enum class Kind { OmegaFamily, Quaternion };
  Kind kind = Kind::OmegaFamily;

  // OmegaFamily
  long p = 0;
  unsigned n = 0;
  long c = 0;  // reduced to [0, p)

  // Quaternion
  FieldDesc field;
  std::optional<Scalar> qa, qb;

  bool operator==(const BrauerClass& o) const;
  [[nodiscard]] std::string to_string() const;
};

/// The class of the Weyl algebra pushed forward along the central scaling
/// with parameter c; c = 1 is the Weyl algebra itself, c = 0 the trivial
/// class.  p = 2 is rejected.
BrauerClass omega_class(long p, unsigned n, long c);

BrauerClass quaternion_class(const FieldDesc& k, const Scalar& a, const Scalar& b);

/// Product of Brauer classes.  Omega family: parameter addition in F_p.
/// Quaternion: only compositions with a split operand (parameter 1) are
/// supported; anything else throws.
BrauerClass br_compose(const BrauerClass& b1, const BrauerClass& b2);

/// Inverse class; omega family negates the parameter (opposite algebra).
BrauerClass br_inverse(const BrauerClass& b);

/// Order of the class in the Brauer group: 1 for the trivial class, p
/// otherwise.  Quaternion classes are rejected.
unsigned long class_order(const BrauerClass& b);

/// A verified isomorphism between two concrete free algebras, together with
/// the transcript of the generator-relation checks that pin the map down.
struct IsoCertificate {
  az::FreeAlgebraPtr source;
  az::FreeAlgebraPtr target;
  az::AlgebraHom hom;
  az::HomVerdict verdict;
  std::vector<std::string> transcript;  // one line per relation checked
  [[nodiscard]] bool passing() const { return verdict.is_hom && verdict.is_iso; }
};

/// One generator-relation check inside a twisted tensor square.  `family`
/// names which of the five relation families the check belongs to:
/// zeta-weyl, alpha-weyl, zeta-alpha-commute, zeta-pth-power, alpha-pth-power.
struct RelationCheck {
  std::string family;
  std::string name;
  bool ok = false;
};

/// Checks all five relation families for the zeta/alpha generator candidates
/// of the twisted tensor square (any desk-scale (p, n), any nonzero twists).
std::vector<RelationCheck> tensor_relation_checks(const weyl::TensorSquareContext& ctx);

/// Certifies the composition law on concrete algebras: the twisted tensor
/// square (with twists c and c') is isomorphic to the (c+c')-twisted Weyl
/// algebra tensored with a matrix algebra over the center.  The isomorphism
/// sends x^e (x) E_ab to zeta^e times the alpha-word representing E_ab, where
///   zeta_i = (c^{eps_i} x_i + c'^{eps_i} y_i) / (c+c')^{eps_i}
///   alpha_i = (c'^{omega_i} x_i - c^{omega_i} y_i) / (c+c')^{eps_i}
/// (eps_i = 1 on the lower index half, omega_i = 1 - eps_i).  Requires
/// c + c' nonzero in F_p and desk scale p^{4n} <= 625.
IsoCertificate verify_group_law_concretely(long p, unsigned n, long c, long cprime);

/// Certifies that the (-1)-twisted Weyl algebra is isomorphic to the opposite
/// algebra via x_i -> (-1)^{omega_i} x_i.  `wrong_sign` flips the exponent
/// set to eps_i, which must break the relation check (negative control).
IsoCertificate verify_opposite_iso(long p, unsigned n, bool wrong_sign = false);

/// The quaternion algebra (a, b) over K on the basis {1, i, j, ij} with
/// i^2 = a, j^2 = b, ji = -ij.  a, b must be nonzero.
az::FreeAlgebraPtr quaternion(const Scalar& a, const Scalar& b, const FieldDesc& k);

/// Decides whether conjugating the parameters of (-1, -sqrt(2)) by the
/// nontrivial automorphism of Q(sqrt 2) yields an isomorphic algebra.  By the
/// norm criterion this holds iff -1 is a sum of two squares in the field,
/// which the engine refutes through exact real-embedding signs; the result is
/// therefore false (the outer automorphism group of the algebra is trivial).
bool csa_conjugate_test();

/// True iff s could be a sum of two squares as far as the real embeddings can
/// tell: both embedding signs are non-negative.  Quadratic fields only.
bool sum_of_two_squares_possible(const Scalar& s);

}  // namespace wcert::br
