#pragma once

#include <cstdint>
#include <vector>

#include "core/scalar.hpp"

namespace wcert::ring {

/// GF(p^k) with log/exp multiplication tables, used only as an evaluation
/// domain for the grid determinant strategy.  Elements are encoded as indices
/// in [0, p^k): the base-p digits of the index are the coefficients of the
/// residue polynomial.  Index i < p is the image of i in the prime subfield.
///
/// Each (p, k) pair is backed by a hardcoded irreducible modulus; sizes are
/// limited to p^k <= 6561 (= 3^8).
class GFField {
 public:
  /// Cached lookup; throws ArithmeticError when (p, k) is not in the table.
  static const GFField& get(long p, unsigned k);
  /// Smallest supported extension of F_p with more than `bound` elements.
  static const GFField& with_size_above(long p, long bound);

  [[nodiscard]] long p() const { return p_; }
  [[nodiscard]] unsigned k() const { return k_; }
  [[nodiscard]] unsigned size() const { return q_; }

  [[nodiscard]] unsigned add(unsigned a, unsigned b) const;
  [[nodiscard]] unsigned sub(unsigned a, unsigned b) const;
  [[nodiscard]] unsigned neg(unsigned a) const;
  [[nodiscard]] unsigned mul(unsigned a, unsigned b) const;
  [[nodiscard]] unsigned inv(unsigned a) const;  // throws on zero
  [[nodiscard]] unsigned pow(unsigned a, long e) const;

  /// True iff the element lies in the prime subfield (a constant digit only).
  [[nodiscard]] bool in_prime_subfield(unsigned a) const { return a < static_cast<unsigned>(p_); }

 private:
  GFField(long p, unsigned k, const std::vector<unsigned>& modulus);

  long p_;
  unsigned k_;
  unsigned q_;
  std::vector<uint16_t> exp_;      // g^i for i in [0, q-1)
  std::vector<uint16_t> log_;      // discrete log base g; log_[0] unused
  std::vector<uint16_t> add_tab_;  // q*q addition table (q is small by construction)
  std::vector<uint16_t> neg_tab_;

  [[nodiscard]] unsigned raw_mul(unsigned a, unsigned b, const std::vector<unsigned>& modulus) const;
  [[nodiscard]] unsigned raw_add(unsigned a, unsigned b) const;
};

}  // namespace wcert::ring
