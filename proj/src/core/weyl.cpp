#include "core/weyl.hpp"

#include <numeric>
#include <sstream>

namespace wcert::weyl {

using ring::ArithmeticError;
using ring::FieldDesc;
using ring::Scalar;

WeylContext::WeylContext(long p, unsigned n) : p_(p), n_(n) {
  if (!ring::is_prime(p)) throw ArithmeticError("Weyl context modulus must be prime");
  if (p == 2) throw ArithmeticError("characteristic 2 is not supported");
  if (n == 0) throw ArithmeticError("Weyl context needs n >= 1");
  center_ = PolyRing{FieldDesc::prime(p), 2 * n};
}

WeylContextPtr make_weyl_context(long p, unsigned n) {
  return std::make_shared<const WeylContext>(p, n);
}

unsigned WeylContext::binom_mod_p(unsigned long a, unsigned long b) const {
  // Lucas: product of digitwise binomials base p.
  if (b > a) return 0;
  const auto p = static_cast<unsigned long>(p_);
  unsigned long r = 1;
  while (a || b) {
    unsigned long da = a % p, db = b % p;
    if (db > da) return 0;
    // C(da, db) mod p with da, db < p
    unsigned long c = 1;
    for (unsigned long i = 0; i < db; ++i) {
      c = c * ((da - i) % p) % p;
      // multiply by inverse of (i+1)
      unsigned long inv = 1, base = (i + 1) % p, e = p - 2;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      c = c * inv % p;
    }
    r = r * c % p;
    a /= p;
    b /= p;
  }
  return static_cast<unsigned>(r);
}

const std::vector<std::pair<unsigned, unsigned>>& WeylContext::partner_swap(unsigned a,
                                                                            unsigned b) const {
  auto key = std::make_pair(a, b);
  auto it = swap_memo_.find(key);
  if (it != swap_memo_.end()) return it->second;
  std::vector<std::pair<unsigned, unsigned>> terms;
  const auto p = static_cast<unsigned long>(p_);
  unsigned kmax = std::min(a, b);
  unsigned long factorial = 1;
  for (unsigned k = 0; k <= kmax; ++k) {
    if (k > 0) factorial = factorial * (k % p) % p;
    if (k >= p) break;  // k! = 0 mod p from here on
    unsigned long coeff =
        static_cast<unsigned long>(binom_mod_p(a, k)) * binom_mod_p(b, k) % p * factorial % p;
    if (coeff != 0) terms.emplace_back(k, static_cast<unsigned>(coeff));
  }
  return swap_memo_.emplace(key, std::move(terms)).first->second;
}

// ---------------------------------------------------------------------------

WeylElement WeylElement::one(WeylContextPtr ctx) { return constant(std::move(ctx), 1); }

WeylElement WeylElement::constant(WeylContextPtr ctx, long c) {
  WeylElement e(std::move(ctx));
  e.add_term(Expo(e.ctx_->generators(), 0), c);
  return e;
}

WeylElement WeylElement::generator(WeylContextPtr ctx, unsigned i) {
  WeylElement e(std::move(ctx));
  if (i >= e.ctx_->generators()) throw ArithmeticError("generator index out of range");
  Expo ex(e.ctx_->generators(), 0);
  ex[i] = 1;
  e.add_term(ex, 1);
  return e;
}

WeylElement WeylElement::monomial(WeylContextPtr ctx, const Expo& e, long c) {
  WeylElement w(std::move(ctx));
  if (e.size() != w.ctx_->generators()) throw ArithmeticError("exponent tuple length mismatch");
  w.add_term(e, c);
  return w;
}

void WeylElement::add_term(const Expo& e, long c) {
  const long p = ctx_->p();
  long r = c % p;
  if (r < 0) r += p;
  if (r == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, static_cast<unsigned>(r));
  } else {
    it->second = static_cast<unsigned>((it->second + r) % p);
    if (it->second == 0) terms_.erase(it);
  }
}

void WeylElement::require_same_context(const WeylElement& o) const {
  if (!ctx_ || !o.ctx_ || !(*ctx_ == *o.ctx_))
    throw ArithmeticError("Weyl context mismatch");
}

unsigned WeylElement::total_degree() const {
  if (terms_.empty()) return 0;
  const Expo& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0u);
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  require_same_context(o);
  WeylElement r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, static_cast<long>(c));
  return r;
}

WeylElement WeylElement::operator-() const { return scale(-1); }

WeylElement WeylElement::operator-(const WeylElement& o) const {
  require_same_context(o);
  WeylElement r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -static_cast<long>(c));
  return r;
}

WeylElement WeylElement::scale(long c) const {
  WeylElement r(ctx_);
  for (const auto& [e, t] : terms_) r.add_term(e, static_cast<long>(t) * (c % ctx_->p()));
  return r;
}

WeylElement WeylElement::mul_generator_power(unsigned i, unsigned b) const {
  // For each monomial x^e, only the partner generator x_{i+n} (when i < n)
  // obstructs moving x_i^b into place; everything beyond index i commutes
  // otherwise.
  WeylElement r(ctx_);
  if (b == 0) return *this;
  const unsigned n = ctx_->n();
  for (const auto& [e, c] : terms_) {
    if (i >= n) {
      // x_i with i in the upper half: its partner x_{i-n} sits to the LEFT in
      // the monomial, already in order; x_i commutes with everything at
      // indices > i-th... indices between? Generators x_j for j > i have no
      // partner at i, so they commute with x_i; append directly.
      Expo e2 = e;
      e2[i] += b;
      r.add_term(e2, static_cast<long>(c));
    } else {
      // partner is x_{i+n}, which appears to the right of slot i
      unsigned a = e[i + n];
      if (a == 0) {
        Expo e2 = e;
        e2[i] += b;
        r.add_term(e2, static_cast<long>(c));
      } else {
        for (const auto& [k, coeff] : ctx_->partner_swap(a, b)) {
          Expo e2 = e;
          e2[i] += b - k;
          e2[i + n] = a - k;
          r.add_term(e2, static_cast<long>(c) * coeff);
        }
      }
    }
  }
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  require_same_context(o);
  WeylElement result(ctx_);
  const unsigned gens = ctx_->generators();
  for (const auto& [eg, cg] : o.terms_) {
    WeylElement cur = this->scale(static_cast<long>(cg));
    for (unsigned i = 0; i < gens; ++i) {
      if (eg[i] > 0) cur = cur.mul_generator_power(i, eg[i]);
    }
    result = result + cur;
  }
  return result;
}

WeylElement WeylElement::pow(unsigned long m) const {
  WeylElement base = *this;
  WeylElement r = one(ctx_);
  while (m > 0) {
    if (m & 1) r = r * base;
    base = base * base;
    m >>= 1;
  }
  return r;
}

bool WeylElement::operator==(const WeylElement& o) const {
  require_same_context(o);
  return terms_ == o.terms_;
}

std::pair<Expo, unsigned> WeylElement::leading_term() const {
  if (terms_.empty()) throw ArithmeticError("leading term of zero element");
  return *terms_.begin();
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_vars = false;
    for (unsigned x : e) has_vars = has_vars || x != 0;
    bool coeff_written = false;
    if (!has_vars || c != 1) {
      os << c;
      coeff_written = true;
    }
    for (unsigned i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (coeff_written) os << "*";
      coeff_written = true;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

WeylElement commutator(const WeylElement& f, const WeylElement& g) { return f * g - g * f; }

bool is_central(const WeylElement& f) {
  const auto& ctx = f.context();
  for (unsigned i = 0; i < ctx->generators(); ++i) {
    WeylElement xi = WeylElement::generator(ctx, i);
    if (!commutator(f, xi).is_zero()) return false;
  }
  return true;
}

std::map<Expo, MultiPoly, GrlexGreater> central_coordinates(const WeylElement& f) {
  const auto& ctx = f.context();
  const unsigned gens = ctx->generators();
  const auto p = static_cast<unsigned>(ctx->p());
  const PolyRing& zring = ctx->center();
  std::map<Expo, MultiPoly, GrlexGreater> coords;
  for (const auto& [e, c] : f.terms()) {
    Expo reduced(gens), central(gens);
    for (unsigned i = 0; i < gens; ++i) {
      reduced[i] = e[i] % p;
      central[i] = e[i] / p;
    }
    auto it = coords.find(reduced);
    if (it == coords.end()) it = coords.emplace(reduced, MultiPoly::zero(zring)).first;
    it->second.add_term(central, Scalar::from_int(zring.field, static_cast<long>(c)));
  }
  // drop coordinates that cancelled to zero
  for (auto it = coords.begin(); it != coords.end();) {
    if (it->second.is_zero())
      it = coords.erase(it);
    else
      ++it;
  }
  return coords;
}

WeylElement from_central_coordinates(const WeylContextPtr& ctx,
                                     const std::map<Expo, MultiPoly, GrlexGreater>& coords) {
  const unsigned gens = ctx->generators();
  const auto p = static_cast<unsigned>(ctx->p());
  WeylElement f(ctx);
  for (const auto& [reduced, poly] : coords) {
    for (const auto& [central, c] : poly.terms()) {
      Expo e(gens);
      for (unsigned i = 0; i < gens; ++i) e[i] = central[i] * p + reduced[i];
      f.add_term(e, c.residue());
    }
  }
  return f;
}

bool leading_term_certificate(const WeylElement& f, const WeylElement& g) {
  if (f.is_zero() || g.is_zero())
    throw ArithmeticError("leading_term_certificate requires nonzero inputs");
  auto [ef, cf] = f.leading_term();
  auto [eg, cg] = g.leading_term();
  WeylElement prod = f * g;
  if (prod.is_zero()) return false;
  auto [ep, cp] = prod.leading_term();
  Expo expected(ef.size());
  for (size_t i = 0; i < ef.size(); ++i) expected[i] = ef[i] + eg[i];
  const auto p = static_cast<unsigned long>(f.context()->p());
  return ep == expected && cp == static_cast<unsigned>(cf * static_cast<unsigned long>(cg) % p);
}

ring::RingAutomorphism omega_bar(long p, unsigned n, long c) {
  PolyRing zring{FieldDesc::prime(p), 2 * n};
  Scalar cs = Scalar::from_int(zring.field, c);
  if (cs.is_zero()) throw ArithmeticError("omega automorphism needs c nonzero mod p");
  std::vector<MultiPoly> fwd, inv;
  for (unsigned i = 0; i < 2 * n; ++i) {
    // omega_i = 1 exactly for the upper half i >= n (1-based i > n)
    long wi = i >= n ? 1 : 0;
    MultiPoly zi = MultiPoly::variable(zring, i);
    fwd.push_back(zi * cs.pow(-wi));
    inv.push_back(zi * cs.pow(wi));
  }
  return ring::RingAutomorphism::from_images(zring, std::move(fwd), std::move(inv));
}

}  // namespace wcert::weyl
