#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace wcert::ring {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Raised on any violation of an arithmetic precondition (field mismatch,
/// division by zero, unsupported construction parameters, ...).
struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Prime, Rational, Quadratic };

/// Descriptor of a coefficient field.  Scalars only combine when their
/// descriptors compare equal.
struct FieldDesc {
  FieldKind kind = FieldKind::Rational;
  long p = 0;  // Prime: the modulus
  long d = 0;  // Quadratic: squarefree integer with (sqrt d)^2 = d

  static FieldDesc prime(long p);
  static FieldDesc rationals();
  /// d must be squarefree and not 0 or 1; non-squarefree input is rejected,
  /// never normalized.
  static FieldDesc quadratic(long d);

  bool operator==(const FieldDesc&) const = default;
  [[nodiscard]] std::string name() const;
  [[nodiscard]] long characteristic() const {
    return kind == FieldKind::Prime ? p : 0;
  }
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// An exact field element: a residue mod p, a rational in lowest terms, or
/// a + b*sqrt(d) in a real quadratic field.  Immutable value type.
class Scalar {
 public:
  Scalar() = default;  // zero of Q
  static Scalar zero(const FieldDesc& f);
  static Scalar one(const FieldDesc& f);
  /// The image of the integer v in the field.
  static Scalar from_int(const FieldDesc& f, long v);
  static Scalar from_int(const FieldDesc& f, const Int& v);
  static Scalar rational(const Rat& r);
  /// a + b*sqrt(d) in Q(sqrt d).
  static Scalar quadratic(long d, const Rat& a, const Rat& b);

  [[nodiscard]] const FieldDesc& field() const { return field_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  [[nodiscard]] Scalar inverse() const;  // throws on zero
  [[nodiscard]] Scalar pow(long e) const;  // negative e inverts first

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Prime fields only: the reduced residue in [0, p).
  [[nodiscard]] long residue() const;
  /// Rational part accessors (Rational and Quadratic kinds).
  [[nodiscard]] const Rat& rat_a() const { return a_; }
  [[nodiscard]] const Rat& rat_b() const { return b_; }

  /// Signs of this element under the two real embeddings sqrt(d) -> +sqrt(d)
  /// and sqrt(d) -> -sqrt(d).  Quadratic kind with d > 0 only; exact integer
  /// comparisons, no floating point.
  [[nodiscard]] std::pair<Sign, Sign> real_embedding_signs() const;

  /// Galois conjugate a - b*sqrt(d) (Quadratic); identity otherwise.
  [[nodiscard]] Scalar conjugate() const;

  [[nodiscard]] std::string to_string() const;

 private:
  FieldDesc field_ = FieldDesc::rationals();
  long fp_ = 0;  // Prime residue
  Rat a_;        // Rational value, or quadratic rational part
  Rat b_;        // quadratic sqrt(d) coefficient

  void require_same_field(const Scalar& o) const;
};

bool is_prime(long n);
bool is_squarefree(long n);

}  // namespace wcert::ring
