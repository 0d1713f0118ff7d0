#include "core/tensor_square.hpp"

#include <sstream>

namespace wcert::weyl {

using ring::ArithmeticError;
using ring::Scalar;

TensorSquareContext::TensorSquareContext(long p, unsigned n, long c, long cprime)
    : small_(make_weyl_context(p, n)), big_(make_weyl_context(p, 2 * n)), c_(c), cprime_(cprime) {
  auto f = ring::FieldDesc::prime(p);
  if (Scalar::from_int(f, c).is_zero() || Scalar::from_int(f, cprime).is_zero())
    throw ArithmeticError("tensor-square twist parameters must be nonzero mod p");
}

unsigned TensorSquareContext::x_index(unsigned i) const {
  const unsigned n = small_->n();
  if (i >= 2 * n) throw ArithmeticError("generator index out of range");
  return i < n ? i : n + i;
}

unsigned TensorSquareContext::y_index(unsigned i) const {
  const unsigned n = small_->n();
  if (i >= 2 * n) throw ArithmeticError("generator index out of range");
  return i < n ? n + i : 2 * n + i;
}

WeylElement TensorSquareContext::x(unsigned i) const {
  return WeylElement::generator(big_, x_index(i));
}

WeylElement TensorSquareContext::y(unsigned i) const {
  return WeylElement::generator(big_, y_index(i));
}

MultiPoly ReducedTensor::central_value(const TensorSquareContext& ctx) const {
  if (coords.empty()) return MultiPoly::zero(ctx.center());
  if (coords.size() != 1 || coords.begin()->first != Expo(4 * ctx.n(), 0))
    throw ArithmeticError("element is not purely central");
  return coords.begin()->second;
}

std::string ReducedTensor::to_string() const {
  if (coords.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, poly] : coords) {
    if (!first) os << " + ";
    first = false;
    os << "(" << poly.to_string() << ")";
    for (unsigned i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*u" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

ReducedTensor reduce_tensor(const TensorSquareContext& ctx, const WeylElement& f) {
  if (!(*f.context() == *ctx.carrier()))
    throw ArithmeticError("element does not live in the tensor-square carrier");
  const unsigned n = ctx.n();
  const PolyRing& zring = ctx.center();
  auto field = zring.field;
  // images of the 4n carrier central coordinates in F_p[z_1..z_{2n}]
  std::vector<MultiPoly> images(4 * n, MultiPoly::zero(zring));
  for (unsigned i = 0; i < 2 * n; ++i) {
    long wi = i >= n ? 1 : 0;
    MultiPoly zi = MultiPoly::variable(zring, i);
    images[ctx.x_index(i)] = zi * Scalar::from_int(field, ctx.c()).pow(wi);
    images[ctx.y_index(i)] = zi * Scalar::from_int(field, ctx.cprime()).pow(wi);
  }
  ReducedTensor out;
  for (const auto& [reduced, poly] : central_coordinates(f)) {
    MultiPoly image = poly.substitute(images);
    if (image.is_zero()) continue;
    auto it = out.coords.find(reduced);
    if (it == out.coords.end())
      out.coords.emplace(reduced, std::move(image));
    else {
      it->second = it->second + image;
      if (it->second.is_zero()) out.coords.erase(it);
    }
  }
  return out;
}

}  // namespace wcert::weyl
