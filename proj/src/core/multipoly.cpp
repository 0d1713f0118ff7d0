#include "core/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wcert::ring {

bool GrlexGreater::operator()(const Expo& a, const Expo& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::string PolyRing::name() const {
  if (nvars == 0) return field.name();
  return field.name() + "[" + std::to_string(nvars) + " vars]";
}

MultiPoly MultiPoly::constant(const PolyRing& ring, const Scalar& c) {
  MultiPoly f(ring);
  f.add_term(Expo(ring.nvars, 0), c);
  return f;
}

MultiPoly MultiPoly::constant(const PolyRing& ring, long c) {
  return constant(ring, Scalar::from_int(ring.field, c));
}

MultiPoly MultiPoly::variable(const PolyRing& ring, unsigned i) {
  if (i >= ring.nvars) throw ArithmeticError("variable index out of range");
  Expo e(ring.nvars, 0);
  e[i] = 1;
  return monomial(ring, e, Scalar::one(ring.field));
}

MultiPoly MultiPoly::monomial(const PolyRing& ring, const Expo& e, const Scalar& c) {
  if (e.size() != ring.nvars) throw ArithmeticError("exponent tuple length mismatch");
  MultiPoly f(ring);
  f.add_term(e, c);
  return f;
}

void MultiPoly::add_term(const Expo& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (!(ring_ == o.ring_))
    throw ArithmeticError("polynomial ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
}

bool MultiPoly::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first == Expo(ring_.nvars, 0);
}

bool MultiPoly::is_one() const { return is_unit() && terms_.begin()->second.is_one(); }

unsigned MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  // grlex descending order: the first key has maximal total degree
  const Expo& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_ring(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  require_same_ring(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_ring(o);
  MultiPoly r(ring_);
  Expo e(ring_.nvars);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (unsigned i = 0; i < ring_.nvars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly base = *this;
  MultiPoly r = one(ring_);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return ring_ == o.ring_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& o) const {
  require_same_ring(o);
  if (o.is_zero()) throw ArithmeticError("division by zero polynomial");
  MultiPoly rem = *this;
  MultiPoly quot(ring_);
  auto [de, dc] = o.leading_term();
  Scalar dc_inv = dc.inverse();
  while (!rem.is_zero()) {
    auto [re, rc] = rem.leading_term();
    Expo qe(ring_.nvars);
    for (unsigned i = 0; i < ring_.nvars; ++i) {
      if (re[i] < de[i]) throw ArithmeticError("exact_div: not divisible");
      qe[i] = re[i] - de[i];
    }
    Scalar qc = rc * dc_inv;
    quot.add_term(qe, qc);
    rem = rem - o * MultiPoly::monomial(ring_, qe, qc);
  }
  return quot;
}

std::pair<Expo, Scalar> MultiPoly::leading_term() const {
  if (terms_.empty()) throw ArithmeticError("leading term of zero polynomial");
  return *terms_.begin();
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != ring_.nvars) throw ArithmeticError("substitute: image count mismatch");
  PolyRing target = ring_.nvars == 0 ? ring_ : images[0].ring();
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly m = MultiPoly::constant(target, c);
    for (unsigned i = 0; i < ring_.nvars; ++i) {
      if (e[i] > 0) m = m * images[i].pow(e[i]);
    }
    r = r + m;
  }
  return r;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_.nvars) throw ArithmeticError("evaluate: point length mismatch");
  Scalar acc = Scalar::zero(ring_.field);
  for (const auto& [e, c] : terms_) {
    Scalar m = c;
    for (unsigned i = 0; i < ring_.nvars; ++i) {
      if (e[i] > 0) m = m * point[i].pow(static_cast<long>(e[i]));
    }
    acc = acc + m;
  }
  return acc;
}

unsigned MultiPoly::evaluate_gf(const GFField& gf, std::span<const unsigned> point) const {
  if (ring_.field.kind != FieldKind::Prime || ring_.field.p != gf.p())
    throw ArithmeticError("evaluate_gf: coefficient field does not embed");
  if (point.size() != ring_.nvars) throw ArithmeticError("evaluate_gf: point length mismatch");
  unsigned acc = 0;
  for (const auto& [e, c] : terms_) {
    unsigned m = static_cast<unsigned>(c.residue());  // F_p embeds as indices < p
    for (unsigned i = 0; i < ring_.nvars && m != 0; ++i) {
      if (e[i] > 0) m = gf.mul(m, gf.pow(point[i], e[i]));
    }
    acc = gf.add(acc, m);
  }
  return acc;
}

Scalar MultiPoly::constant_value() const {
  if (is_zero()) return Scalar::zero(ring_.field);
  if (!is_unit()) throw ArithmeticError("constant_value of non-constant polynomial");
  return terms_.begin()->second;
}

std::string MultiPoly::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_vars = false;
    for (unsigned i = 0; i < ring_.nvars; ++i) has_vars = has_vars || e[i] != 0;
    bool coeff_written = false;
    if (!has_vars || !c.is_one()) {
      os << c.to_string();
      coeff_written = true;
    }
    for (unsigned i = 0; i < ring_.nvars; ++i) {
      if (e[i] == 0) continue;
      if (coeff_written) os << "*";
      coeff_written = true;
      os << var_prefix << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace wcert::ring
