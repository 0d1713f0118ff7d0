#include "core/free_algebra.hpp"

#include <random>

namespace wcert::az {

using ring::ArithmeticError;
using ring::DetOptions;
using ring::Expo;
using ring::FieldDesc;
using ring::Scalar;
using weyl::WeylElement;

FreeAlgebra::FreeAlgebra(PolyRing base, unsigned rank, std::vector<Coord> structure, Coord unit,
                         std::vector<std::string> basis_labels)
    : base_(base), rank_(rank), structure_(std::move(structure)), unit_(std::move(unit)),
      labels_(std::move(basis_labels)) {
  if (rank_ == 0) throw ArithmeticError("free algebra needs rank >= 1");
  if (structure_.size() != static_cast<size_t>(rank_) * rank_)
    throw ArithmeticError("structure constant table has wrong shape");
  if (labels_.empty()) {
    for (unsigned i = 0; i < rank_; ++i) labels_.push_back("b" + std::to_string(i + 1));
  }
  verify_unit();
}

Coord FreeAlgebra::basis_element(unsigned i) const {
  if (i >= rank_) throw ArithmeticError("basis index out of range");
  return {{i, MultiPoly::one(base_)}};
}

Coord FreeAlgebra::add(const Coord& a, const Coord& b) const {
  Coord r = a;
  for (const auto& [k, c] : b) {
    auto it = r.find(k);
    if (it == r.end()) {
      r.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

Coord FreeAlgebra::sub(const Coord& a, const Coord& b) const {
  Coord nb;
  for (const auto& [k, c] : b) nb.emplace(k, -c);
  return add(a, nb);
}

Coord FreeAlgebra::scale(const Coord& a, const MultiPoly& c) const {
  Coord r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a) {
    MultiPoly p = v * c;
    if (!p.is_zero()) r.emplace(k, std::move(p));
  }
  return r;
}

Coord FreeAlgebra::mul(const Coord& a, const Coord& b) const {
  Coord r;
  for (const auto& [i, pa] : a) {
    for (const auto& [j, pb] : b) {
      MultiPoly pab = pa * pb;
      if (pab.is_zero()) continue;
      for (const auto& [k, c] : sc(i, j)) {
        MultiPoly add_val = pab * c;
        if (add_val.is_zero()) continue;
        auto it = r.find(k);
        if (it == r.end()) {
          r.emplace(k, std::move(add_val));
        } else {
          it->second = it->second + add_val;
          if (it->second.is_zero()) r.erase(it);
        }
      }
    }
  }
  return r;
}

Coord FreeAlgebra::pow(const Coord& a, unsigned e) const {
  Coord base = a;
  Coord r = unit_;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

void FreeAlgebra::verify_unit() const {
  for (unsigned j = 0; j < rank_; ++j) {
    Coord bj = basis_element(j);
    if (!(mul(unit_, bj) == bj) || !(mul(bj, unit_) == bj))
      throw ArithmeticError("unit law fails on basis element " + std::to_string(j));
  }
}

void FreeAlgebra::verify_associativity(size_t budget, size_t samples, unsigned seed) const {
  auto check = [&](unsigned i, unsigned j, unsigned k) {
    Coord left = mul(sc(i, j), basis_element(k));
    Coord right = mul(basis_element(i), sc(j, k));
    if (!(left == right))
      throw ArithmeticError("associativity fails on basis triple (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + ")");
  };
  size_t total = static_cast<size_t>(rank_) * rank_ * rank_;
  if (total <= budget) {
    for (unsigned i = 0; i < rank_; ++i)
      for (unsigned j = 0; j < rank_; ++j)
        for (unsigned k = 0; k < rank_; ++k) check(i, j, k);
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<unsigned> pick(0, rank_ - 1);
    for (size_t s = 0; s < samples; ++s) check(pick(rng), pick(rng), pick(rng));
  }
}

bool FreeAlgebra::operator==(const FreeAlgebra& o) const {
  return base_ == o.base_ && rank_ == o.rank_ && structure_ == o.structure_ && unit_ == o.unit_;
}

// ---------------------------------------------------------------------------

namespace {

// basis exponent tuple <-> index, first coordinate most significant
unsigned tuple_to_index(const Expo& e, unsigned radix) {
  unsigned idx = 0;
  for (unsigned x : e) idx = idx * radix + x;
  return idx;
}

Expo index_to_tuple(unsigned idx, unsigned radix, unsigned len) {
  Expo e(len);
  for (unsigned i = len; i-- > 0;) {
    e[i] = idx % radix;
    idx /= radix;
  }
  return e;
}

std::string monomial_label(const Expo& e) {
  std::string s;
  for (unsigned i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

FreeAlgebraPtr weyl_structure_constants(long p, unsigned n) {
  auto ctx = weyl::make_weyl_context(p, n);
  const unsigned gens = 2 * n;
  const auto up = static_cast<unsigned>(p);
  unsigned rank = 1;
  for (unsigned i = 0; i < gens; ++i) rank *= up;
  const PolyRing& zring = ctx->center();

  std::vector<WeylElement> basis;
  std::vector<std::string> labels;
  basis.reserve(rank);
  for (unsigned idx = 0; idx < rank; ++idx) {
    Expo e = index_to_tuple(idx, up, gens);
    basis.push_back(WeylElement::monomial(ctx, e, 1));
    labels.push_back(monomial_label(e));
  }

  std::vector<Coord> sc(static_cast<size_t>(rank) * rank);
  for (unsigned i = 0; i < rank; ++i) {
    for (unsigned j = 0; j < rank; ++j) {
      WeylElement prod = basis[i] * basis[j];
      Coord out;
      for (const auto& [reduced, poly] : weyl::central_coordinates(prod))
        out.emplace(tuple_to_index(reduced, up), poly);
      sc[static_cast<size_t>(i) * rank + j] = std::move(out);
    }
  }
  Coord unit{{0u, MultiPoly::one(zring)}};
  auto alg = std::make_shared<FreeAlgebra>(zring, rank, std::move(sc), std::move(unit),
                                           std::move(labels));
  alg->verify_associativity();
  return alg;
}

FreeAlgebraPtr matrix_algebra(unsigned m, const PolyRing& base) {
  if (m == 0) throw ArithmeticError("matrix algebra needs m >= 1");
  unsigned rank = m * m;
  std::vector<Coord> sc(static_cast<size_t>(rank) * rank);
  MultiPoly one = MultiPoly::one(base);
  std::vector<std::string> labels;
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b)
      labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b)
      for (unsigned c = 0; c < m; ++c)
        for (unsigned d = 0; d < m; ++d) {
          if (b != c) continue;  // E_ab E_cd = delta_bc E_ad
          unsigned i = a * m + b, j = c * m + d, k = a * m + d;
          sc[static_cast<size_t>(i) * rank + j] = Coord{{k, one}};
        }
  Coord unit;
  for (unsigned a = 0; a < m; ++a) unit.emplace(a * m + a, one);
  auto alg = std::make_shared<FreeAlgebra>(base, rank, std::move(sc), std::move(unit),
                                           std::move(labels));
  alg->verify_associativity();
  return alg;
}

FreeAlgebraPtr tensor_over_R(const FreeAlgebraPtr& a, const FreeAlgebraPtr& b) {
  if (!(a->base() == b->base())) throw ArithmeticError("tensor factors have different base rings");
  const unsigned ra = a->rank(), rb = b->rank();
  const unsigned rank = ra * rb;
  std::vector<Coord> sc(static_cast<size_t>(rank) * rank);
  for (unsigned i1 = 0; i1 < ra; ++i1)
    for (unsigned i2 = 0; i2 < rb; ++i2)
      for (unsigned j1 = 0; j1 < ra; ++j1)
        for (unsigned j2 = 0; j2 < rb; ++j2) {
          Coord out;
          for (const auto& [k1, c1] : a->sc(i1, j1))
            for (const auto& [k2, c2] : b->sc(i2, j2)) {
              MultiPoly c = c1 * c2;
              if (!c.is_zero()) out.emplace(k1 * rb + k2, std::move(c));
            }
          sc[static_cast<size_t>(i1 * rb + i2) * rank + (j1 * rb + j2)] = std::move(out);
        }
  Coord unit;
  for (const auto& [k1, c1] : a->unit())
    for (const auto& [k2, c2] : b->unit()) {
      MultiPoly c = c1 * c2;
      if (!c.is_zero()) unit.emplace(k1 * rb + k2, std::move(c));
    }
  std::vector<std::string> labels;
  for (unsigned i1 = 0; i1 < ra; ++i1)
    for (unsigned i2 = 0; i2 < rb; ++i2)
      labels.push_back(a->basis_label(i1) + "(x)" + b->basis_label(i2));
  auto alg = std::make_shared<FreeAlgebra>(a->base(), rank, std::move(sc), std::move(unit),
                                           std::move(labels));
  alg->verify_associativity();
  return alg;
}

FreeAlgebraPtr opposite(const FreeAlgebraPtr& a) {
  const unsigned r = a->rank();
  std::vector<Coord> sc(static_cast<size_t>(r) * r);
  std::vector<std::string> labels;
  for (unsigned i = 0; i < r; ++i) labels.push_back(a->basis_label(i));
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) sc[static_cast<size_t>(i) * r + j] = a->sc(j, i);
  auto alg = std::make_shared<FreeAlgebra>(a->base(), r, std::move(sc), a->unit(),
                                           std::move(labels));
  alg->verify_associativity();
  return alg;
}

FreeAlgebraPtr pushforward(const FreeAlgebraPtr& a, const RingAutomorphism& phi) {
  if (phi.base().components.size() != 1 || !(phi.base().components[0] == a->base()))
    throw ArithmeticError("pushforward automorphism acts on a different ring");
  const unsigned r = a->rank();
  auto twist = [&](const Coord& c) {
    Coord out;
    for (const auto& [k, v] : c) {
      MultiPoly w = phi.apply_inverse_poly(v);
      if (!w.is_zero()) out.emplace(k, std::move(w));
    }
    return out;
  };
  std::vector<Coord> sc(static_cast<size_t>(r) * r);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) sc[static_cast<size_t>(i) * r + j] = twist(a->sc(i, j));
  std::vector<std::string> labels;
  for (unsigned i = 0; i < r; ++i) labels.push_back(a->basis_label(i));
  auto alg = std::make_shared<FreeAlgebra>(a->base(), r, std::move(sc), twist(a->unit()),
                                           std::move(labels));
  alg->verify_associativity();
  return alg;
}

PolyMatrix action_map_matrix(const FreeAlgebra& a) {
  const unsigned r = a.rank();
  const unsigned rr = r * r;
  PolyMatrix m(a.base(), rr, rr);
  for (unsigned i = 0; i < r; ++i) {
    for (unsigned j = 0; j < r; ++j) {
      unsigned col = i * r + j;
      for (unsigned t = 0; t < r; ++t) {
        Coord val = a.mul(a.mul(a.basis_element(i), a.basis_element(t)), a.basis_element(j));
        for (const auto& [s, c] : val) m.set(s * r + t, col, c);
      }
    }
  }
  return m;
}

AzumayaCertificate azumaya_check(const FreeAlgebra& a, const DetOptions& opts) {
  auto res = ring::poly_det_full(action_map_matrix(a), opts);
  AzumayaCertificate cert;
  cert.determinant = res.det;
  cert.azumaya = res.det.is_unit();
  cert.strategies_run = res.strategies_run;
  cert.cross_checked = res.cross_checked;
  return cert;
}

HomVerdict check_hom(const AlgebraHom& h, const DetOptions& det_opts) {
  const FreeAlgebra& src = *h.source;
  const FreeAlgebra& dst = *h.target;
  if (!(src.base() == dst.base())) throw ArithmeticError("hom endpoints over different base rings");
  if (h.images.size() != src.rank()) throw ArithmeticError("hom image count mismatch");
  HomVerdict v;
  v.det = MultiPoly::zero(src.base());

  auto apply = [&](const Coord& x) {
    Coord out;
    for (const auto& [k, c] : x) out = dst.add(out, dst.scale(h.images[k], c));
    return out;
  };

  // unit preservation
  if (!(apply(src.unit()) == dst.unit())) {
    v.failure = "unit not preserved";
    return v;
  }
  // multiplicativity on every basis pair
  for (unsigned i = 0; i < src.rank(); ++i) {
    for (unsigned j = 0; j < src.rank(); ++j) {
      Coord lhs = dst.mul(h.images[i], h.images[j]);
      Coord rhs = apply(src.sc(i, j));
      if (!(lhs == rhs)) {
        v.failure = "multiplicativity fails on basis pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")";
        return v;
      }
    }
  }
  v.is_hom = true;
  if (src.rank() != dst.rank()) return v;
  // coordinate matrix determinant decides invertibility over the base ring
  PolyMatrix cm(src.base(), dst.rank(), src.rank());
  for (unsigned i = 0; i < src.rank(); ++i)
    for (const auto& [k, c] : h.images[i]) cm.set(k, i, c);
  v.det = ring::poly_det(cm, det_opts);
  v.is_iso = v.det.is_unit();
  return v;
}

// ---------------------------------------------------------------------------

namespace {

/// Specializes all central variables to zero, re-homing the algebra over the
/// bare coefficient field.
FreeAlgebraPtr specialize_to_field(const FreeAlgebra& a) {
  PolyRing field_ring{a.base().field, 0};
  std::vector<Scalar> origin(a.base().nvars, Scalar::zero(a.base().field));
  auto spec = [&](const Coord& c) {
    Coord out;
    for (const auto& [k, v] : c) {
      Scalar s = v.evaluate(origin);
      if (!s.is_zero()) out.emplace(k, MultiPoly::constant(field_ring, s));
    }
    return out;
  };
  const unsigned r = a.rank();
  std::vector<Coord> sc(static_cast<size_t>(r) * r);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) sc[static_cast<size_t>(i) * r + j] = spec(a.sc(i, j));
  std::vector<std::string> labels;
  for (unsigned i = 0; i < r; ++i) labels.push_back(a.basis_label(i));
  auto alg = std::make_shared<FreeAlgebra>(field_ring, r, std::move(sc), spec(a.unit()),
                                           std::move(labels));
  alg->verify_associativity();
  return alg;
}

}  // namespace

DiffOpRepresentation diffop_representation(long p) {
  const auto up = static_cast<unsigned>(p);
  DiffOpRepresentation rep;
  rep.source = specialize_to_field(*weyl_structure_constants(p, 1));
  PolyRing field_ring{FieldDesc::prime(p), 0};
  rep.target = matrix_algebra(up, field_ring);

  // t-multiplication and d/dt on the basis {1, t, .., t^{p-1}} of F_p[t]/(t^p)
  auto entry = [&](unsigned row, unsigned col, long val) {
    return std::make_pair(row * up + col, MultiPoly::constant(field_ring, val));
  };
  Coord tmat, dmat;
  for (unsigned j = 0; j + 1 < up; ++j) tmat.insert(entry(j + 1, j, 1));
  for (unsigned j = 1; j < up; ++j) dmat.insert(entry(j - 1, j, static_cast<long>(j)));

  rep.hom.source = rep.source;
  rep.hom.target = rep.target;
  for (unsigned a = 0; a < up; ++a) {
    Coord ta = rep.target->pow(tmat, a);
    for (unsigned b = 0; b < up; ++b)
      rep.hom.images.push_back(rep.target->mul(ta, rep.target->pow(dmat, b)));
  }
  rep.verdict = check_hom(rep.hom);

  // invert the coordinate matrix over F_p to express each E_ab in the source
  // basis t^u d^v
  const unsigned r = up * up;
  const FieldDesc f = FieldDesc::prime(p);
  std::vector<Scalar> aug(static_cast<size_t>(r) * 2 * r, Scalar::zero(f));
  auto at = [&](unsigned i, unsigned j) -> Scalar& { return aug[static_cast<size_t>(i) * 2 * r + j]; };
  for (unsigned i = 0; i < r; ++i) {
    for (const auto& [k, c] : rep.hom.images[i]) at(k, i) = c.constant_value();
    at(i, r + i) = Scalar::one(f);
  }
  for (unsigned k = 0; k < r; ++k) {
    unsigned piv = k;
    while (piv < r && at(piv, k).is_zero()) ++piv;
    if (piv == r) throw ArithmeticError("differential operator images are not independent");
    if (piv != k)
      for (unsigned j = 0; j < 2 * r; ++j) std::swap(at(k, j), at(piv, j));
    Scalar inv = at(k, k).inverse();
    for (unsigned j = 0; j < 2 * r; ++j) at(k, j) = at(k, j) * inv;
    for (unsigned i = 0; i < r; ++i) {
      if (i == k || at(i, k).is_zero()) continue;
      Scalar factor = at(i, k);
      for (unsigned j = 0; j < 2 * r; ++j) at(i, j) = at(i, j) - factor * at(k, j);
    }
  }
  for (unsigned eidx = 0; eidx < r; ++eidx) {
    Coord pre;
    for (unsigned i = 0; i < r; ++i) {
      const Scalar& lam = at(i, r + eidx);
      if (!lam.is_zero()) pre.emplace(i, MultiPoly::constant(field_ring, lam));
    }
    rep.preimages.push_back(std::move(pre));
  }
  return rep;
}

}  // namespace wcert::az
