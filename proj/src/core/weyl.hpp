#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "core/multipoly.hpp"
#include "core/ring_automorphism.hpp"

namespace wcert::weyl {

using ring::Expo;
using ring::GrlexGreater;
using ring::MultiPoly;
using ring::PolyRing;

/// Parameters of the Weyl algebra on 2n generators over F_p, together with
/// the rewrite memo.  p = 2 is rejected.  Generators are indexed 0..2n-1;
/// generator i and its partner i+n (indices mod nothing -- partners exist
/// only across the halves) satisfy [x_i, x_{i+n}] = -1, all other pairs
/// commute.
class WeylContext {
 public:
  WeylContext(long p, unsigned n);

  [[nodiscard]] long p() const { return p_; }
  [[nodiscard]] unsigned n() const { return n_; }
  [[nodiscard]] unsigned generators() const { return 2 * n_; }

  /// The central polynomial ring F_p[z_1..z_{2n}].
  [[nodiscard]] const PolyRing& center() const { return center_; }

  /// PBW form of x_{i+n}^a x_i^b for a partner pair, as a list of
  /// (k, coefficient) with term x_i^{b-k} x_{i+n}^{a-k}:
  ///   x_{i+n}^a x_i^b = sum_k C(a,k) C(b,k) k!  x_i^{b-k} x_{i+n}^{a-k}.
  /// Memoized; coefficients reduced mod p (terms with k >= p vanish).
  [[nodiscard]] const std::vector<std::pair<unsigned, unsigned>>& partner_swap(unsigned a,
                                                                               unsigned b) const;

  /// C(a, b) mod p via Lucas.
  [[nodiscard]] unsigned binom_mod_p(unsigned long a, unsigned long b) const;

  bool operator==(const WeylContext& o) const { return p_ == o.p_ && n_ == o.n_; }

 private:
  long p_;
  unsigned n_;
  PolyRing center_;
  mutable std::map<std::pair<unsigned, unsigned>, std::vector<std::pair<unsigned, unsigned>>>
      swap_memo_;
};

using WeylContextPtr = std::shared_ptr<const WeylContext>;
WeylContextPtr make_weyl_context(long p, unsigned n);

/// An element of A_n(F_p) in PBW normal form: exponent tuples of length 2n
/// mapped to nonzero residues mod p, kept in graded-lex descending order.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(WeylContextPtr ctx) : ctx_(std::move(ctx)) {}

  static WeylElement zero(WeylContextPtr ctx) { return WeylElement(std::move(ctx)); }
  static WeylElement one(WeylContextPtr ctx);
  static WeylElement constant(WeylContextPtr ctx, long c);
  /// Generator x_{i+1} (0-based index i).
  static WeylElement generator(WeylContextPtr ctx, unsigned i);
  static WeylElement monomial(WeylContextPtr ctx, const Expo& e, long c);

  [[nodiscard]] const WeylContextPtr& context() const { return ctx_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Expo, unsigned, GrlexGreater>& terms() const { return terms_; }
  [[nodiscard]] unsigned total_degree() const;

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator-() const;
  WeylElement operator*(const WeylElement& o) const;  // PBW normal-form product
  [[nodiscard]] WeylElement scale(long c) const;
  [[nodiscard]] WeylElement pow(unsigned long m) const;  // repeated squaring
  bool operator==(const WeylElement& o) const;
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  [[nodiscard]] std::pair<Expo, unsigned> leading_term() const;

  /// Canonical printing: graded-lex descending, `c*x1^a1*...*x2n^a2n` with
  /// zero exponents omitted and `^1` elided.
  [[nodiscard]] std::string to_string() const;

  void add_term(const Expo& e, long c);

 private:
  WeylContextPtr ctx_;
  std::map<Expo, unsigned, GrlexGreater> terms_;

  void require_same_context(const WeylElement& o) const;
  /// this * x_i^b, in normal form.
  [[nodiscard]] WeylElement mul_generator_power(unsigned i, unsigned b) const;
};

WeylElement commutator(const WeylElement& f, const WeylElement& g);

/// True iff f commutes with every generator.
bool is_central(const WeylElement& f);

/// The unique decomposition f = sum_{0 <= e < p} c_e(z) x^e: maps reduced
/// exponent tuples to polynomials in F_p[z_1..z_{2n}] via x_i^{p q + r} =
/// z_i^q x_i^r.  Reconstruction is exact.
std::map<Expo, MultiPoly, GrlexGreater> central_coordinates(const WeylElement& f);

/// Rebuilds the element from its central coordinates (round-trip check).
WeylElement from_central_coordinates(const WeylContextPtr& ctx,
                                     const std::map<Expo, MultiPoly, GrlexGreater>& coords);

/// Checks LT(fg) = LT(f) LT(g) under graded-lex, the testable face of the
/// domain property of the associated graded ring.  Throws on zero input.
bool leading_term_certificate(const WeylElement& f, const WeylElement& g);

/// The central-ring automorphism scaling z_i by c^{-omega_i} (omega_i = 1 for
/// i > n), together with its inverse.  c must be nonzero mod p.
ring::RingAutomorphism omega_bar(long p, unsigned n, long c);

}  // namespace wcert::weyl
