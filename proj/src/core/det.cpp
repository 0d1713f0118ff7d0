#include <atomic>
#include <future>
#include <optional>
#include <thread>

#include "core/polymatrix.hpp"

namespace wcert::ring {

PolyMatrix PolyMatrix::identity(const PolyRing& ring, unsigned n) {
  PolyMatrix m(ring, n, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, MultiPoly::one(ring));
  return m;
}

void PolyMatrix::set(unsigned i, unsigned j, MultiPoly v) {
  if (!(v.ring() == ring_)) throw ArithmeticError("matrix entry ring mismatch");
  if (i >= rows_ || j >= cols_) throw ArithmeticError("matrix index out of range");
  entries_[static_cast<size_t>(i) * cols_ + j] = std::move(v);
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_ || !(ring_ == o.ring_)) throw ArithmeticError("matrix product shape/ring mismatch");
  PolyMatrix r(ring_, rows_, o.cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < o.cols_; ++j) {
      MultiPoly acc = MultiPoly::zero(ring_);
      for (unsigned t = 0; t < cols_; ++t) acc = acc + at(i, t) * o.at(t, j);
      r.set(i, j, std::move(acc));
    }
  return r;
}

unsigned PolyMatrix::max_entry_degree() const {
  unsigned d = 0;
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) d = std::max(d, at(i, j).total_degree());
  return d;
}

namespace {

// ---------------------------------------------------------------------------
// Strategy (i): Bareiss fraction-free elimination over the polynomial ring.
// Every division is exact by the Bareiss identity.  Returns nullopt when an
// intermediate entry exceeds the term budget.
std::optional<MultiPoly> bareiss_det(const PolyMatrix& m, size_t term_budget) {
  const unsigned n = m.rows();
  const PolyRing& ring = m.ring();
  std::vector<MultiPoly> a;
  a.reserve(static_cast<size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) a.push_back(m.at(i, j));
  auto at = [&](unsigned i, unsigned j) -> MultiPoly& { return a[static_cast<size_t>(i) * n + j]; };

  int sign = 1;
  MultiPoly prev = MultiPoly::one(ring);
  for (unsigned k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      unsigned swap_row = k + 1;
      while (swap_row < n && at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly::zero(ring);  // singular column
      for (unsigned j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (unsigned i = k + 1; i < n; ++i) {
      for (unsigned j = k + 1; j < n; ++j) {
        MultiPoly num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        at(i, j) = num.is_zero() ? num : num.exact_div(prev);
        if (term_budget && at(i, j).term_count() > term_budget) return std::nullopt;
      }
      at(i, k) = MultiPoly::zero(ring);
    }
    prev = at(k, k);
  }
  MultiPoly det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

// ---------------------------------------------------------------------------
// Division-based Gaussian elimination over the coefficient field; the m = 0
// branch of strategy (ii) and the per-point kernel of the rational grid.
Scalar field_det(std::vector<Scalar>& a, unsigned n, const FieldDesc& f) {
  Scalar det = Scalar::one(f);
  auto at = [&](unsigned i, unsigned j) -> Scalar& { return a[static_cast<size_t>(i) * n + j]; };
  for (unsigned k = 0; k < n; ++k) {
    unsigned piv = k;
    while (piv < n && at(piv, k).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(f);
    if (piv != k) {
      for (unsigned j = k; j < n; ++j) std::swap(at(k, j), at(piv, j));
      det = -det;
    }
    det = det * at(k, k);
    Scalar inv = at(k, k).inverse();
    for (unsigned i = k + 1; i < n; ++i) {
      if (at(i, k).is_zero()) continue;
      Scalar factor = at(i, k) * inv;
      for (unsigned j = k; j < n; ++j) at(i, j) = at(i, j) - factor * at(k, j);
    }
  }
  return det;
}

unsigned gf_det(std::vector<unsigned>& a, unsigned n, const GFField& gf) {
  unsigned det = 1;
  bool neg = false;
  auto at = [&](unsigned i, unsigned j) -> unsigned& { return a[static_cast<size_t>(i) * n + j]; };
  for (unsigned k = 0; k < n; ++k) {
    unsigned piv = k;
    while (piv < n && at(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (unsigned j = k; j < n; ++j) std::swap(at(k, j), at(piv, j));
      neg = !neg;
    }
    det = gf.mul(det, at(k, k));
    unsigned inv = gf.inv(at(k, k));
    for (unsigned i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      unsigned factor = gf.mul(at(i, k), inv);
      for (unsigned j = k; j < n; ++j) at(i, j) = gf.sub(at(i, j), gf.mul(factor, at(k, j)));
    }
  }
  return neg ? gf.neg(det) : det;
}

// Newton interpolation through points x_0..x_{s-1}, in place: values become
// monomial coefficients c_0..c_{s-1}.
void newton_to_coeffs_gf(std::vector<unsigned>& v, const std::vector<unsigned>& pts,
                         const GFField& gf) {
  const size_t s = v.size();
  for (size_t j = 1; j < s; ++j)
    for (size_t i = s - 1; i >= j; --i)
      v[i] = gf.mul(gf.sub(v[i], v[i - 1]), gf.inv(gf.sub(pts[i], pts[i - j])));
  // Horner expansion of the Newton form
  std::vector<unsigned> c(s, 0);
  for (size_t i = s; i-- > 0;) {
    // c = c * (x - x_i) + d_i
    for (size_t t = s - 1; t >= 1; --t)
      c[t] = gf.add(c[t - 1], gf.mul(c[t], gf.neg(pts[i])));
    c[0] = gf.mul(c[0], gf.neg(pts[i]));
    c[0] = gf.add(c[0], v[i]);
  }
  v = std::move(c);
}

void newton_to_coeffs_scalar(std::vector<Scalar>& v, const std::vector<Scalar>& pts) {
  const size_t s = v.size();
  for (size_t j = 1; j < s; ++j)
    for (size_t i = s - 1; i >= j; --i)
      v[i] = (v[i] - v[i - 1]) * (pts[i] - pts[i - j]).inverse();
  std::vector<Scalar> c(s, Scalar::zero(pts[0].field()));
  for (size_t i = s; i-- > 0;) {
    for (size_t t = s - 1; t >= 1; --t) c[t] = c[t - 1] + c[t] * (-pts[i]);
    c[0] = c[0] * (-pts[i]);
    c[0] = c[0] + v[i];
  }
  v = std::move(c);
}

// Applies the 1-D transform along every axis of a flat s^m tensor.
template <typename Elem, typename Transform>
void tensor_interpolate(std::vector<Elem>& values, unsigned m, size_t s, Transform&& tf) {
  std::vector<Elem> fiber(s);
  for (unsigned axis = 0; axis < m; ++axis) {
    size_t stride = 1;
    for (unsigned a = axis + 1; a < m; ++a) stride *= s;
    size_t block = stride * s;
    size_t total = values.size();
    for (size_t base = 0; base < total; base += block) {
      for (size_t off = 0; off < stride; ++off) {
        for (size_t t = 0; t < s; ++t) fiber[t] = values[base + off + t * stride];
        tf(fiber);
        for (size_t t = 0; t < s; ++t) values[base + off + t * stride] = fiber[t];
      }
    }
  }
}

unsigned thread_count(const DetOptions& opts) {
  unsigned t = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  return t ? t : 1;
}

// Strategy (ii) over a prime coefficient field with nvars > 0.
MultiPoly evaluation_det_gf(const PolyMatrix& m, const DetOptions& opts) {
  const unsigned n = m.rows();
  const PolyRing& ring = m.ring();
  const unsigned nv = ring.nvars;
  const unsigned dbound = n * m.max_entry_degree();
  const GFField& gf = GFField::with_size_above(ring.field.p, dbound);
  const size_t s = dbound + 1;

  size_t total = 1;
  for (unsigned i = 0; i < nv; ++i) {
    if (total > (size_t(1) << 40) / s) throw ArithmeticError("evaluation grid infeasibly large");
    total *= s;
  }

  // compact term representation of each entry for fast repeated evaluation
  struct Term { unsigned c; std::vector<unsigned> e; };
  std::vector<std::vector<Term>> entries(static_cast<size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (const auto& [e, c] : m.at(i, j).terms())
        entries[static_cast<size_t>(i) * n + j].push_back(
            {static_cast<unsigned>(c.residue()), e});
  unsigned max_exp = 0;
  for (const auto& ts : entries)
    for (const auto& t : ts)
      for (unsigned x : t.e) max_exp = std::max(max_exp, x);

  std::vector<unsigned> values(total, 0);
  auto worker = [&](size_t begin, size_t end) {
    std::vector<unsigned> point(nv), mat(static_cast<size_t>(n) * n);
    // powers[v][e] = point[v]^e
    std::vector<std::vector<unsigned>> powers(nv, std::vector<unsigned>(max_exp + 1, 1));
    for (size_t idx = begin; idx < end; ++idx) {
      size_t rest = idx;
      for (unsigned v = nv; v-- > 0;) {
        point[v] = static_cast<unsigned>(rest % s);
        rest /= s;
      }
      for (unsigned v = 0; v < nv; ++v)
        for (unsigned e = 1; e <= max_exp; ++e) powers[v][e] = gf.mul(powers[v][e - 1], point[v]);
      for (size_t t = 0; t < mat.size(); ++t) {
        unsigned acc = 0;
        for (const auto& term : entries[t]) {
          unsigned mval = term.c;
          for (unsigned v = 0; v < nv && mval; ++v)
            if (term.e[v]) mval = gf.mul(mval, powers[v][term.e[v]]);
          acc = gf.add(acc, mval);
        }
        mat[t] = acc;
      }
      values[idx] = gf_det(mat, n, gf);
    }
  };
  unsigned nthreads = thread_count(opts);
  if (nthreads <= 1 || total < 64) {
    worker(0, total);
  } else {
    std::vector<std::future<void>> futs;
    size_t chunk = (total + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
      size_t b = t * chunk, e = std::min(total, b + chunk);
      if (b >= e) break;
      futs.push_back(std::async(std::launch::async, worker, b, e));
    }
    for (auto& f : futs) f.get();
  }

  // constancy shortcut: constant on a grid exceeding the degree bound means
  // constant everywhere
  bool constant = true;
  for (size_t i = 1; i < total && constant; ++i) constant = values[i] == values[0];
  if (constant) {
    if (!gf.in_prime_subfield(values[0]))
      throw ArithmeticError("grid determinant constant lies outside the prime field");
    return MultiPoly::constant(ring, static_cast<long>(values[0]));
  }

  std::vector<unsigned> pts(s);
  for (size_t i = 0; i < s; ++i) pts[i] = static_cast<unsigned>(i);
  tensor_interpolate(values, nv, s,
                     [&](std::vector<unsigned>& fib) { newton_to_coeffs_gf(fib, pts, gf); });
  MultiPoly det(ring);
  Expo e(nv);
  for (size_t idx = 0; idx < total; ++idx) {
    if (values[idx] == 0) continue;
    if (!gf.in_prime_subfield(values[idx]))
      throw ArithmeticError("interpolated coefficient lies outside the prime field");
    size_t rest = idx;
    for (unsigned v = nv; v-- > 0;) {
      e[v] = static_cast<unsigned>(rest % s);
      rest /= s;
    }
    det.add_term(e, Scalar::from_int(ring.field, static_cast<long>(values[idx])));
  }
  return det;
}

// Strategy (ii) over a characteristic-zero field: integer grid points.
MultiPoly evaluation_det_char0(const PolyMatrix& m, const DetOptions&) {
  const unsigned n = m.rows();
  const PolyRing& ring = m.ring();
  const unsigned nv = ring.nvars;
  if (nv == 0) {
    std::vector<Scalar> a;
    a.reserve(static_cast<size_t>(n) * n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) a.push_back(m.at(i, j).constant_value());
    return MultiPoly::constant(ring, field_det(a, n, ring.field));
  }
  const unsigned dbound = n * m.max_entry_degree();
  const size_t s = dbound + 1;
  size_t total = 1;
  for (unsigned i = 0; i < nv; ++i) {
    if (total > 4'000'000 / s) throw ArithmeticError("rational evaluation grid infeasibly large");
    total *= s;
  }
  std::vector<Scalar> values(total, Scalar::zero(ring.field));
  std::vector<Scalar> point(nv, Scalar::zero(ring.field));
  std::vector<Scalar> mat(static_cast<size_t>(n) * n, Scalar::zero(ring.field));
  for (size_t idx = 0; idx < total; ++idx) {
    size_t rest = idx;
    for (unsigned v = nv; v-- > 0;) {
      point[v] = Scalar::from_int(ring.field, static_cast<long>(rest % s));
      rest /= s;
    }
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        mat[static_cast<size_t>(i) * n + j] = m.at(i, j).evaluate(point);
    values[idx] = field_det(mat, n, ring.field);
  }
  bool constant = true;
  for (size_t i = 1; i < total && constant; ++i) constant = values[i] == values[0];
  if (constant) return MultiPoly::constant(ring, values[0]);

  std::vector<Scalar> pts(s, Scalar::zero(ring.field));
  for (size_t i = 0; i < s; ++i) pts[i] = Scalar::from_int(ring.field, static_cast<long>(i));
  tensor_interpolate(values, nv, s,
                     [&](std::vector<Scalar>& fib) { newton_to_coeffs_scalar(fib, pts); });
  MultiPoly det(ring);
  Expo e(nv);
  for (size_t idx = 0; idx < total; ++idx) {
    if (values[idx].is_zero()) continue;
    size_t rest = idx;
    for (unsigned v = nv; v-- > 0;) {
      e[v] = static_cast<unsigned>(rest % s);
      rest /= s;
    }
    det.add_term(e, values[idx]);
  }
  return det;
}

MultiPoly evaluation_det(const PolyMatrix& m, const DetOptions& opts) {
  const PolyRing& ring = m.ring();
  if (ring.field.kind == FieldKind::Prime) {
    if (ring.nvars == 0) {
      std::vector<Scalar> a;
      const unsigned n = m.rows();
      a.reserve(static_cast<size_t>(n) * n);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) a.push_back(m.at(i, j).constant_value());
      return MultiPoly::constant(ring, field_det(a, n, ring.field));
    }
    return evaluation_det_gf(m, opts);
  }
  return evaluation_det_char0(m, opts);
}

}  // namespace

DetResult poly_det_full(const PolyMatrix& m, const DetOptions& opts) {
  if (m.rows() != m.cols()) throw ArithmeticError("determinant of non-square matrix");
  if (m.rows() == 0) return {MultiPoly::one(m.ring()), {"fraction-free", "evaluation"}, true};

  DetResult res{MultiPoly::zero(m.ring()), {}, false};
  std::optional<MultiPoly> ff;
  std::optional<MultiPoly> ev;
  switch (opts.strategy) {
    case DetStrategy::FractionFree:
      ff = bareiss_det(m, 0);
      break;
    case DetStrategy::Evaluation:
      ev = evaluation_det(m, opts);
      break;
    case DetStrategy::Both:
      ff = bareiss_det(m, 0);
      ev = evaluation_det(m, opts);
      break;
    case DetStrategy::Auto:
      ff = bareiss_det(m, opts.fraction_free_term_budget);
      ev = evaluation_det(m, opts);
      break;
  }
  if (ff) res.strategies_run.emplace_back("fraction-free");
  if (ev) res.strategies_run.emplace_back("evaluation");
  if (ff && ev) {
    if (!(*ff == *ev))
      throw ArithmeticError("determinant strategies disagree: fraction-free=" + ff->to_string() +
                            " evaluation=" + ev->to_string());
    res.cross_checked = true;
  }
  res.det = ff ? *ff : *ev;
  return res;
}

MultiPoly poly_det(const PolyMatrix& m, const DetOptions& opts) {
  return poly_det_full(m, opts).det;
}

}  // namespace wcert::ring
