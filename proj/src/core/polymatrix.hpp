#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/multipoly.hpp"

namespace wcert::ring {

/// A rectangular matrix with entries in one polynomial ring.
class PolyMatrix {
 public:
  PolyMatrix(const PolyRing& ring, unsigned rows, unsigned cols)
      : ring_(ring), rows_(rows), cols_(cols),
        entries_(static_cast<size_t>(rows) * cols, MultiPoly::zero(ring)) {}

  static PolyMatrix identity(const PolyRing& ring, unsigned n);

  [[nodiscard]] const PolyRing& ring() const { return ring_; }
  [[nodiscard]] unsigned rows() const { return rows_; }
  [[nodiscard]] unsigned cols() const { return cols_; }

  [[nodiscard]] const MultiPoly& at(unsigned i, unsigned j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }
  void set(unsigned i, unsigned j, MultiPoly v);

  PolyMatrix operator*(const PolyMatrix& o) const;

  [[nodiscard]] unsigned max_entry_degree() const;

 private:
  PolyRing ring_;
  unsigned rows_, cols_;
  std::vector<MultiPoly> entries_;
};

enum class DetStrategy {
  Auto,          // fraction-free under a budget, evaluation grid always; cross-check
  FractionFree,  // Bareiss elimination over the polynomial ring
  Evaluation,    // grid evaluation in an extension field + interpolation
  Both,          // run both unconditionally and require agreement
};

struct DetOptions {
  DetStrategy strategy = DetStrategy::Auto;
  /// Fraction-free budget: abort that strategy when an intermediate entry
  /// exceeds this many terms (Auto mode only).
  size_t fraction_free_term_budget = 20000;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct DetResult {
  MultiPoly det;
  std::vector<std::string> strategies_run;  // "fraction-free", "evaluation"
  bool cross_checked = false;               // both ran and agreed
};

/// Exact determinant of a square polynomial matrix over a field or a
/// polynomial ring over a field.  When both strategies run they must agree;
/// disagreement throws.  Non-square input throws.
DetResult poly_det_full(const PolyMatrix& m, const DetOptions& opts = {});

/// Convenience wrapper returning just the determinant.
MultiPoly poly_det(const PolyMatrix& m, const DetOptions& opts = {});

}  // namespace wcert::ring
