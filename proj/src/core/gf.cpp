#include "core/gf.hpp"

#include <map>
#include <mutex>

namespace wcert::ring {

namespace {

// Monic irreducible modulus polynomials, coefficients from the x^k term down
// to the constant term.
struct IrredEntry {
  long p;
  unsigned k;
  std::vector<unsigned> coeffs;
};

const std::vector<IrredEntry>& irreducibles() {
  static const std::vector<IrredEntry> table = {
      {3, 2, {1, 0, 1}},
      {3, 3, {1, 0, 2, 1}},
      {3, 4, {1, 0, 0, 1, 2}},
      {3, 5, {1, 0, 0, 0, 2, 1}},
      {3, 6, {1, 0, 0, 0, 0, 1, 2}},
      {3, 7, {1, 0, 0, 0, 0, 1, 0, 2}},
      {3, 8, {1, 0, 0, 0, 0, 0, 1, 0, 2}},
      {5, 2, {1, 0, 2}},
      {5, 3, {1, 0, 1, 1}},
      {5, 4, {1, 0, 0, 0, 2}},
      {5, 5, {1, 0, 0, 0, 4, 1}},
      {7, 2, {1, 0, 1}},
      {7, 3, {1, 0, 0, 2}},
      {7, 4, {1, 0, 0, 1, 1}},
      {11, 2, {1, 0, 1}},
      {11, 3, {1, 0, 1, 4}},
      {13, 2, {1, 0, 2}},
      {13, 3, {1, 0, 0, 2}},
  };
  return table;
}

constexpr unsigned kMaxSize = 6561;      // 3^8
constexpr unsigned kAddTableLimit = 2048;  // add table memory cutoff

}  // namespace

unsigned GFField::raw_add(unsigned a, unsigned b) const {
  unsigned r = 0, mult = 1;
  const auto p = static_cast<unsigned>(p_);
  for (unsigned i = 0; i < k_; ++i) {
    unsigned da = a % p, db = b % p;
    a /= p;
    b /= p;
    r += ((da + db) % p) * mult;
    mult *= p;
  }
  return r;
}

unsigned GFField::raw_mul(unsigned a, unsigned b, const std::vector<unsigned>& modulus) const {
  const auto p = static_cast<unsigned>(p_);
  // digit vectors, low to high
  std::vector<unsigned> da(k_), db(k_), prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // reduce by the monic modulus
  for (unsigned deg = 2 * k_ - 2; deg >= k_; --deg) {
    unsigned c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (unsigned t = 1; t <= k_; ++t) {
      unsigned mc = modulus[t];  // coefficient of x^{k-t}
      if (mc == 0) continue;
      unsigned idx = deg - t;
      prod[idx] = (prod[idx] + (p - mc % p) * c) % p;
    }
  }
  unsigned r = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += prod[i] * mult;
    mult *= p;
  }
  return r;
}

GFField::GFField(long p, unsigned k, const std::vector<unsigned>& modulus)
    : p_(p), k_(k), q_(1) {
  for (unsigned i = 0; i < k; ++i) q_ *= static_cast<unsigned>(p);
  // Find a multiplicative generator by brute force and build log/exp tables.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  bool found = false;
  for (unsigned g = 2; g < q_ && !found; ++g) {
    unsigned x = 1, count = 0;
    std::vector<bool> seen(q_, false);
    do {
      x = raw_mul(x, g, modulus);
      ++count;
    } while (x != 1 && count <= q_);
    if (count == q_ - 1) {
      // g is primitive
      unsigned y = 1;
      for (unsigned i = 0; i + 1 < q_; ++i) {
        exp_[i] = static_cast<uint16_t>(y);
        log_[y] = static_cast<uint16_t>(i);
        y = raw_mul(y, g, modulus);
      }
      found = true;
    }
  }
  if (!found) throw ArithmeticError("no generator found for GF table (bad modulus?)");
  neg_tab_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    unsigned n = 0, mult = 1, aa = a;
    for (unsigned i = 0; i < k_; ++i) {
      unsigned d = aa % p_;
      aa /= p_;
      n += ((p_ - d) % p_) * mult;
      mult *= p_;
    }
    neg_tab_[a] = static_cast<uint16_t>(n);
  }
  if (q_ <= kAddTableLimit) {
    add_tab_.assign(static_cast<size_t>(q_) * q_, 0);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b <= a; ++b) {
        auto s = static_cast<uint16_t>(raw_add(a, b));
        add_tab_[static_cast<size_t>(a) * q_ + b] = s;
        add_tab_[static_cast<size_t>(b) * q_ + a] = s;
      }
  }
}

unsigned GFField::add(unsigned a, unsigned b) const {
  if (!add_tab_.empty()) return add_tab_[static_cast<size_t>(a) * q_ + b];
  return raw_add(a, b);
}

unsigned GFField::neg(unsigned a) const { return neg_tab_[a]; }

unsigned GFField::sub(unsigned a, unsigned b) const { return add(a, neg_tab_[b]); }

unsigned GFField::mul(unsigned a, unsigned b) const {
  if (a == 0 || b == 0) return 0;
  unsigned s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

unsigned GFField::inv(unsigned a) const {
  if (a == 0) throw ArithmeticError("GF inverse of zero");
  unsigned l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

unsigned GFField::pow(unsigned a, long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw ArithmeticError("GF inverse of zero");
    return 0;
  }
  long m = q_ - 1;
  long l = (static_cast<long>(log_[a]) * (e % m)) % m;
  if (l < 0) l += m;
  return exp_[l];
}

const GFField& GFField::get(long p, unsigned k) {
  static std::map<std::pair<long, unsigned>, GFField> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  for (const auto& e : irreducibles()) {
    if (e.p == p && e.k == k)
      return cache.emplace(key, GFField(p, k, e.coeffs)).first->second;
  }
  throw ArithmeticError("no hardcoded irreducible for GF(" + std::to_string(p) + "^" +
                        std::to_string(k) + ")");
}

const GFField& GFField::with_size_above(long p, long bound) {
  if (p > bound) {
    // The prime field itself suffices; model it as k=1 via a degenerate table.
    // Prime fields are not in the irreducible table, so build on demand.
    static std::map<long, GFField> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    return cache.emplace(p, GFField(p, 1, std::vector<unsigned>{1, 0})).first->second;
  }
  long q = p;
  unsigned k = 1;
  while (q <= bound) {
    q *= p;
    ++k;
    if (q > kMaxSize)
      throw ArithmeticError("evaluation grid too small: need field of size > " +
                            std::to_string(bound) + " in characteristic " + std::to_string(p) +
                            " but supported sizes stop at " + std::to_string(kMaxSize));
  }
  return get(p, k);
}

}  // namespace wcert::ring
