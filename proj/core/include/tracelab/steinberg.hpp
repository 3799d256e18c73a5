#pragma once

#include <vector>

#include "tracelab/rootdata.hpp"

namespace tracelab {

// Image of a torus point under the character map c: coords[i] = b_i(t).
template <class T>
std::vector<T> char_map(const RootSystem& rs, const std::vector<T>& torus_point) {
  std::vector<T> coords;
  coords.reserve(rs.fundamental_chars.size());
  for (const auto& b : rs.fundamental_chars) coords.push_back(b.evaluate(torus_point));
  return coords;
}

// The discriminant as a polynomial in the base coordinates b_1..b_r.  Sign
// convention: this is the polynomial discriminant of the characteristic
// polynomial, so for A1 it is b^2-4 and its pullback through the character
// map is minus the Weyl discriminant.  Downstream consumers only use |D| and
// squareness, which do not see the sign at odd places.
struct BaseDiscriminant {
  LaurentPoly poly;  // polynomial in b_1..b_r, nonnegative exponents

  template <class T>
  T evaluate(const std::vector<T>& base_point) const {
    return poly.evaluate(base_point);
  }
};

BaseDiscriminant base_discriminant(const RootSystem& rs);

// Substitute b_i -> fundamental character of rs; exact composition.
LaurentPoly pull_back(const BaseDiscriminant& d, const RootSystem& rs);

// Exact check of the Jacobian identity det[xi_j d/dxi_j b_i] = +-Delta(t).
struct Hc1Report {
  bool ok = false;
  int sign = 0;  // +1 or -1 when ok
  LaurentPoly jacobian;
  LaurentPoly delta;
  LaurentPoly residual;  // jacobian - delta when the identity fails
};

Hc1Report verify_hc1(const RootSystem& rs);

// Characteristic polynomial X^2 - bX + 1 of the SL(2) stable class over b.
template <class T>
struct Sl2Chart {
  T b;
  // coefficients of X^2 - bX + 1, highest degree first: {1, -b, 1}
  std::vector<T> char_poly_coeffs() const {
    return {embed_int(Int(1), b), embed_int(Int(0), b) - b, embed_int(Int(1), b)};
  }
  T discriminant() const { return b * b - embed_int(Int(4), b); }
};

template <class T>
Sl2Chart<T> sl2_chart(T b) {
  return Sl2Chart<T>{std::move(b)};
}

}  // namespace tracelab
