#include "core/scalar.hpp"

#include <sstream>

namespace wcert::ring {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

bool is_squarefree(long n) {
  if (n == 0) return false;
  if (n < 0) n = -n;
  for (long q = 2; q * q <= n; ++q) {
    if (n % (q * q) == 0) return false;
  }
  return true;
}

FieldDesc FieldDesc::prime(long p) {
  if (!is_prime(p)) throw ArithmeticError("field modulus must be prime: " + std::to_string(p));
  FieldDesc f;
  f.kind = FieldKind::Prime;
  f.p = p;
  return f;
}

FieldDesc FieldDesc::rationals() { return FieldDesc{}; }

FieldDesc FieldDesc::quadratic(long d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw ArithmeticError("quadratic field parameter must be squarefree and != 0, 1: " +
                          std::to_string(d));
  FieldDesc f;
  f.kind = FieldKind::Quadratic;
  f.d = d;
  return f;
}

std::string FieldDesc::name() const {
  switch (kind) {
    case FieldKind::Prime: return "F" + std::to_string(p);
    case FieldKind::Rational: return "Q";
    case FieldKind::Quadratic: return "Q(sqrt(" + std::to_string(d) + "))";
  }
  return "?";
}

namespace {
long mod_reduce(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

long mod_pow(long base, long e, long p) {
  long r = 1, b = mod_reduce(base, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}
}  // namespace

Scalar Scalar::zero(const FieldDesc& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldDesc& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldDesc& f, long v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Prime)
    s.fp_ = mod_reduce(v, f.p);
  else
    s.a_ = v;
  return s;
}

Scalar Scalar::from_int(const FieldDesc& f, const Int& v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Prime) {
    Int r = v % f.p;
    s.fp_ = mod_reduce(static_cast<long>(r), f.p);
  } else {
    s.a_ = v;
  }
  return s;
}

Scalar Scalar::rational(const Rat& r) {
  Scalar s;
  s.field_ = FieldDesc::rationals();
  s.a_ = r;
  return s;
}

Scalar Scalar::quadratic(long d, const Rat& a, const Rat& b) {
  Scalar s;
  s.field_ = FieldDesc::quadratic(d);
  s.a_ = a;
  s.b_ = b;
  return s;
}

bool Scalar::is_zero() const {
  if (field_.kind == FieldKind::Prime) return fp_ == 0;
  return a_ == 0 && b_ == 0;
}

bool Scalar::is_one() const { return *this == one(field_); }

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw ArithmeticError("scalar field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar r = *this;
  if (field_.kind == FieldKind::Prime) {
    r.fp_ = mod_reduce(fp_ + o.fp_, field_.p);
  } else {
    r.a_ = a_ + o.a_;
    r.b_ = b_ + o.b_;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.kind == FieldKind::Prime) {
    r.fp_ = mod_reduce(-fp_, field_.p);
  } else {
    r.a_ = -a_;
    r.b_ = -b_;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar r = zero(field_);
  switch (field_.kind) {
    case FieldKind::Prime:
      r.fp_ = fp_ * o.fp_ % field_.p;
      break;
    case FieldKind::Rational:
      r.a_ = a_ * o.a_;
      break;
    case FieldKind::Quadratic:
      // (a + b s)(a' + b' s) with s^2 = d, exactly.
      r.a_ = a_ * o.a_ + b_ * o.b_ * field_.d;
      r.b_ = a_ * o.b_ + b_ * o.a_;
      break;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero in " + field_.name());
  Scalar r = zero(field_);
  switch (field_.kind) {
    case FieldKind::Prime:
      r.fp_ = mod_pow(fp_, field_.p - 2, field_.p);
      break;
    case FieldKind::Rational:
      r.a_ = 1 / a_;
      break;
    case FieldKind::Quadratic: {
      Rat norm = a_ * a_ - b_ * b_ * field_.d;
      if (norm == 0)
        throw ArithmeticError("zero norm in quadratic inverse (d not squarefree?)");
      r.a_ = a_ / norm;
      r.b_ = -b_ / norm;
      break;
    }
  }
  return r;
}

Scalar Scalar::pow(long e) const {
  Scalar base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Scalar r = one(field_);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  if (field_.kind == FieldKind::Prime) return fp_ == o.fp_;
  return a_ == o.a_ && b_ == o.b_;
}

long Scalar::residue() const {
  if (field_.kind != FieldKind::Prime)
    throw ArithmeticError("residue() requires a prime field scalar");
  return fp_;
}

namespace {
Sign rat_sign(const Rat& r) {
  if (r == 0) return Sign::Zero;
  return r > 0 ? Sign::Positive : Sign::Negative;
}
}  // namespace

std::pair<Sign, Sign> Scalar::real_embedding_signs() const {
  if (field_.kind != FieldKind::Quadratic)
    throw ArithmeticError("real_embedding_signs requires a quadratic field element");
  if (field_.d < 0)
    throw ArithmeticError("real embeddings undefined for imaginary quadratic field d=" +
                          std::to_string(field_.d));
  // Sign of a + b*sqrt(d): compare a^2 against b^2 d when the parts disagree.
  auto sign_of = [&](const Rat& a, const Rat& b) -> Sign {
    Sign sa = rat_sign(a), sb = rat_sign(b);
    if (sb == Sign::Zero) return sa;
    if (sa == Sign::Zero) return sb;
    if (sa == sb) return sa;
    Rat a2 = a * a, b2d = b * b * field_.d;
    if (a2 == b2d) return Sign::Zero;  // impossible for squarefree d > 1, kept for safety
    return a2 > b2d ? sa : sb;
  };
  return {sign_of(a_, b_), sign_of(a_, -b_)};
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  if (field_.kind == FieldKind::Quadratic) r.b_ = -b_;
  return r;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  switch (field_.kind) {
    case FieldKind::Prime:
      os << fp_;
      break;
    case FieldKind::Rational:
      os << a_;
      break;
    case FieldKind::Quadratic:
      if (b_ == 0) {
        os << a_;
      } else if (a_ == 0) {
        os << b_ << "*sqrt(" << field_.d << ")";
      } else {
        os << a_ << (b_ > 0 ? "+" : "") << b_ << "*sqrt(" << field_.d << ")";
      }
      break;
  }
  return os.str();
}

}  // namespace wcert::ring
