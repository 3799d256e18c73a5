#pragma once

#include <vector>

#include "tracelab/laurent.hpp"

namespace tracelab {

enum class RootLabel { A1, A2 };

// Split root datum in fundamental-weight coordinates: the torus coordinates
// are xi_i = t^{mu_i}, roots and rho are integer vectors in that basis, and
// the fundamental characters b_i = tr rho_i(t) are Laurent polynomials.
struct RootSystem {
  RootLabel label;
  int rank;
  std::vector<LaurentMonomial> simple_roots;
  std::vector<LaurentMonomial> positive_roots;
  LaurentMonomial rho;
  std::vector<LaurentPoly> fundamental_chars;
};

// Only the two types exercised by the SL(2)/SL(3) pipeline are built; the
// eigenvalue chart x_1 = xi_1, x_k = xi_k/xi_{k-1}, x_{n+1} = xi_n^{-1} makes
// b_k the k-th elementary symmetric polynomial of the x_i.
RootSystem build_root_system(RootLabel label);

// t^{-rho} prod_{alpha>0} (t^alpha - 1), expanded exactly.  Alternating under
// the Weyl group; its square is the Weyl discriminant up to sign.
LaurentPoly weyl_delta(const RootSystem& rs);

// prod over all roots (both signs) of (t^alpha - 1); Weyl-invariant.
LaurentPoly weyl_discriminant(const RootSystem& rs);

// Action of the i-th simple reflection on exponent vectors (1-based i).  In
// the fundamental-weight basis s_i(e) = e - e_i * alpha_i.
LaurentMonomial reflect_exponents(const RootSystem& rs, int i, const LaurentMonomial& e);
LaurentPoly reflect_poly(const RootSystem& rs, int i, const LaurentPoly& p);

const char* to_string(RootLabel label);

}  // namespace tracelab
