#include "core/ring_automorphism.hpp"

#include <numeric>

namespace wcert::ring {

ProductElement product_one(const ProductRing& r) {
  ProductElement e;
  for (const auto& c : r.components) e.parts.push_back(MultiPoly::one(c));
  return e;
}

ProductElement product_zero(const ProductRing& r) {
  ProductElement e;
  for (const auto& c : r.components) e.parts.push_back(MultiPoly::zero(c));
  return e;
}

ProductElement product_mul(const ProductElement& a, const ProductElement& b) {
  if (a.parts.size() != b.parts.size()) throw ArithmeticError("product ring arity mismatch");
  ProductElement r;
  for (size_t i = 0; i < a.parts.size(); ++i) r.parts.push_back(a.parts[i] * b.parts[i]);
  return r;
}

ProductElement product_add(const ProductElement& a, const ProductElement& b) {
  if (a.parts.size() != b.parts.size()) throw ArithmeticError("product ring arity mismatch");
  ProductElement r;
  for (size_t i = 0; i < a.parts.size(); ++i) r.parts.push_back(a.parts[i] + b.parts[i]);
  return r;
}

std::vector<ProductElement> component_idempotents(const ProductRing& r) {
  if (r.components.empty()) throw ArithmeticError("product ring needs >= 1 components");
  std::vector<ProductElement> es;
  for (size_t i = 0; i < r.components.size(); ++i) {
    ProductElement e = product_zero(r);
    e.parts[i] = MultiPoly::one(r.components[i]);
    es.push_back(std::move(e));
  }
  // verify orthogonality and partition of unity
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      if (!(product_mul(es[i], es[j]) == product_zero(r)))
        throw ArithmeticError("idempotents not orthogonal");
  ProductElement sum = product_zero(r);
  for (const auto& e : es) sum = product_add(sum, e);
  if (!(sum == product_one(r))) throw ArithmeticError("idempotents do not sum to 1");
  return es;
}

// ---------------------------------------------------------------------------

namespace {
MultiPoly conjugate_coeffs(const MultiPoly& f) {
  MultiPoly r(f.ring());
  for (const auto& [e, c] : f.terms()) r.add_term(e, c.conjugate());
  return r;
}
}  // namespace

MultiPoly RingAutomorphism::transform(const ComponentMap& cm, const PolyRing& target,
                                      const MultiPoly& f) const {
  MultiPoly g = cm.conjugate ? conjugate_coeffs(f) : f;
  if (f.ring().nvars == 0) {
    // no coordinates; re-home the constant in the target ring
    return MultiPoly::constant(target, g.constant_value());
  }
  return g.substitute(cm.images);
}

RingAutomorphism::RingAutomorphism(ProductRing base, std::vector<unsigned> perm,
                                   std::vector<ComponentMap> fwd, std::vector<ComponentMap> inv)
    : base_(std::move(base)), perm_(std::move(perm)), fwd_(std::move(fwd)), inv_(std::move(inv)) {
  const size_t n = base_.components.size();
  if (perm_.size() != n || fwd_.size() != n || inv_.size() != n)
    throw ArithmeticError("automorphism component data arity mismatch");
  std::vector<bool> hit(n, false);
  inv_perm_.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (perm_[i] >= n || hit[perm_[i]]) throw ArithmeticError("component map is not a permutation");
    hit[perm_[i]] = true;
    inv_perm_[perm_[i]] = static_cast<unsigned>(i);
  }
  verify();
}

void RingAutomorphism::verify() const {
  const size_t n = base_.components.size();
  for (size_t lam = 0; lam < n; ++lam) {
    const PolyRing& src = base_.components[lam];
    const PolyRing& mid = base_.components[perm_[lam]];
    if (fwd_[lam].images.size() != src.nvars)
      throw ArithmeticError("forward image count mismatch");
    if (fwd_[lam].conjugate && src.field.kind != FieldKind::Quadratic)
      throw ArithmeticError("coefficient conjugation requires a quadratic field");
    // inverse map component mid -> lam must exist with matching arity
    const ComponentMap& back = inv_[perm_[lam]];
    if (back.images.size() != mid.nvars) throw ArithmeticError("inverse image count mismatch");
    if (!(base_.components[inv_perm_[perm_[lam]]] == src))
      throw ArithmeticError("inverse permutation inconsistent");
    // forward then inverse fixes every generator of the source component
    for (unsigned v = 0; v < src.nvars; ++v) {
      MultiPoly gen = MultiPoly::variable(src, v);
      MultiPoly round = transform(back, src, transform(fwd_[lam], mid, gen));
      if (!(round == gen))
        throw ArithmeticError("claimed inverse does not invert the forward map");
    }
    // and the conjugation flags must cancel
    if (fwd_[lam].conjugate != back.conjugate)
      throw ArithmeticError("conjugation flags of forward and inverse maps disagree");
    // inverse then forward on the mid component's generators
    for (unsigned v = 0; v < mid.nvars; ++v) {
      MultiPoly gen = MultiPoly::variable(mid, v);
      MultiPoly round = transform(fwd_[lam], mid, transform(back, src, gen));
      if (!(round == gen))
        throw ArithmeticError("forward map does not invert the claimed inverse");
    }
  }
}

RingAutomorphism RingAutomorphism::identity(const ProductRing& base) {
  const size_t n = base.components.size();
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<ComponentMap> maps;
  for (const auto& c : base.components) {
    ComponentMap cm;
    for (unsigned v = 0; v < c.nvars; ++v) cm.images.push_back(MultiPoly::variable(c, v));
    maps.push_back(std::move(cm));
  }
  return RingAutomorphism(base, perm, maps, maps);
}

RingAutomorphism RingAutomorphism::component_permutation(const ProductRing& base,
                                                         std::vector<unsigned> perm) {
  const size_t n = base.components.size();
  if (perm.size() != n) throw ArithmeticError("permutation arity mismatch");
  for (size_t i = 0; i < n; ++i)
    if (!(base.components[i] == base.components[perm[i]]))
      throw ArithmeticError("permuted components must have identical rings");
  std::vector<ComponentMap> maps;
  for (const auto& c : base.components) {
    ComponentMap cm;
    for (unsigned v = 0; v < c.nvars; ++v) cm.images.push_back(MultiPoly::variable(c, v));
    maps.push_back(std::move(cm));
  }
  return RingAutomorphism(base, perm, maps, maps);
}

RingAutomorphism RingAutomorphism::from_images(const PolyRing& ring,
                                               std::vector<MultiPoly> fwd_images,
                                               std::vector<MultiPoly> inv_images) {
  ProductRing base = ProductRing::single(ring);
  ComponentMap f{false, std::move(fwd_images)};
  ComponentMap g{false, std::move(inv_images)};
  return RingAutomorphism(base, {0}, {f}, {g});
}

RingAutomorphism RingAutomorphism::quadratic_conjugation(long d) {
  PolyRing ring{FieldDesc::quadratic(d), 0};
  ComponentMap cm;
  cm.conjugate = true;
  return RingAutomorphism(ProductRing::single(ring), {0}, {cm}, {cm});
}

ProductElement RingAutomorphism::apply(const ProductElement& x) const {
  if (x.parts.size() != base_.components.size())
    throw ArithmeticError("element arity mismatch in automorphism application");
  ProductElement r = product_zero(base_);
  for (size_t lam = 0; lam < x.parts.size(); ++lam)
    r.parts[perm_[lam]] = transform(fwd_[lam], base_.components[perm_[lam]], x.parts[lam]);
  return r;
}

ProductElement RingAutomorphism::apply_inverse(const ProductElement& x) const {
  ProductElement r = product_zero(base_);
  for (size_t mu = 0; mu < x.parts.size(); ++mu)
    r.parts[inv_perm_[mu]] = transform(inv_[mu], base_.components[inv_perm_[mu]], x.parts[mu]);
  return r;
}

MultiPoly RingAutomorphism::apply_poly(const MultiPoly& f) const {
  if (base_.components.size() != 1) throw ArithmeticError("apply_poly needs a single component");
  return transform(fwd_[0], base_.components[0], f);
}

MultiPoly RingAutomorphism::apply_inverse_poly(const MultiPoly& f) const {
  if (base_.components.size() != 1) throw ArithmeticError("apply_inverse_poly needs a single component");
  return transform(inv_[0], base_.components[0], f);
}

RingAutomorphism RingAutomorphism::compose(const RingAutomorphism& other) const {
  if (!(base_ == other.base_)) throw ArithmeticError("automorphism base mismatch in composition");
  const size_t n = base_.components.size();
  std::vector<unsigned> perm(n);
  std::vector<ComponentMap> fwd(n), inv(n);
  for (size_t lam = 0; lam < n; ++lam) {
    unsigned mid = other.perm_[lam];
    perm[lam] = perm_[mid];
    // forward: apply other's map, then this's map at the mid component
    ComponentMap cm;
    cm.conjugate = other.fwd_[lam].conjugate != fwd_[mid].conjugate;
    const PolyRing& target = base_.components[perm[lam]];
    for (const auto& img : other.fwd_[lam].images)
      cm.images.push_back(transform(fwd_[mid], target, img));
    fwd[lam] = std::move(cm);
  }
  for (size_t mu = 0; mu < n; ++mu) {
    // inverse of (this o other) = other^{-1} o this^{-1}
    unsigned mid = inv_perm_[mu];
    unsigned src = other.inv_perm_[mid];
    ComponentMap cm;
    cm.conjugate = inv_[mu].conjugate != other.inv_[mid].conjugate;
    const PolyRing& target = base_.components[src];
    for (const auto& img : inv_[mu].images)
      cm.images.push_back(transform(other.inv_[mid], target, img));
    inv[mu] = std::move(cm);
  }
  return RingAutomorphism(base_, perm, fwd, inv);
}

RingAutomorphism RingAutomorphism::inverse() const {
  return RingAutomorphism(base_, inv_perm_, inv_, fwd_);
}

bool RingAutomorphism::is_identity() const {
  for (size_t lam = 0; lam < base_.components.size(); ++lam) {
    if (perm_[lam] != lam) return false;
    if (fwd_[lam].conjugate) return false;
    const PolyRing& c = base_.components[lam];
    for (unsigned v = 0; v < c.nvars; ++v)
      if (!(fwd_[lam].images[v] == MultiPoly::variable(c, v))) return false;
  }
  return true;
}

bool RingAutomorphism::operator==(const RingAutomorphism& o) const {
  if (!(base_ == o.base_) || perm_ != o.perm_) return false;
  for (size_t lam = 0; lam < fwd_.size(); ++lam) {
    if (fwd_[lam].conjugate != o.fwd_[lam].conjugate) return false;
    if (!(fwd_[lam].images == o.fwd_[lam].images)) return false;
  }
  return true;
}

}  // namespace wcert::ring
