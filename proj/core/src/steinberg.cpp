#include "tracelab/steinberg.hpp"

namespace tracelab {

namespace {

LaurentPoly mono2(int e1, int e2, Int c) { return LaurentPoly::monomial({e1, e2}, std::move(c)); }

}  // namespace

BaseDiscriminant base_discriminant(const RootSystem& rs) {
  switch (rs.label) {
    case RootLabel::A1: {
      // disc(X^2 - bX + 1) = b^2 - 4
      LaurentPoly d = LaurentPoly::monomial({2}, 1) - LaurentPoly::constant(1, 4);
      return {d};
    }
    case RootLabel::A2: {
      // disc(X^3 - b1 X^2 + b2 X - 1) = 18 b1 b2 - 4 b1^3 + b1^2 b2^2 - 4 b2^3 - 27,
      // the symmetric reduction of prod_{i<j}(x_i - x_j)^2 with x1 x2 x3 = 1.
      LaurentPoly d = mono2(1, 1, 18) - mono2(3, 0, 4) + mono2(2, 2, 1) - mono2(0, 3, 4) -
                      LaurentPoly::constant(2, 27);
      return {d};
    }
  }
  throw std::invalid_argument("unsupported root system label");
}

LaurentPoly pull_back(const BaseDiscriminant& d, const RootSystem& rs) {
  return d.poly.evaluate(rs.fundamental_chars);
}

Hc1Report verify_hc1(const RootSystem& rs) {
  Hc1Report rep{false, 0, jacobian_log_det(rs.fundamental_chars), weyl_delta(rs),
                LaurentPoly(rs.rank)};
  if (rep.jacobian == rep.delta) {
    rep.ok = true;
    rep.sign = 1;
  } else if (rep.jacobian == -rep.delta) {
    rep.ok = true;
    rep.sign = -1;
  } else {
    rep.residual = rep.jacobian - rep.delta;
  }
  return rep;
}

}  // namespace tracelab
