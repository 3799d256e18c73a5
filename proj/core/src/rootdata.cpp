#include "tracelab/rootdata.hpp"

namespace tracelab {

namespace {

// Eigenvalue coordinates of the standard representation of SL(n+1) as
// monomials in xi: x_1 = xi_1, x_k = xi_k xi_{k-1}^{-1}, x_{n+1} = xi_n^{-1}.
std::vector<LaurentPoly> eigenvalue_chart(int n) {
  std::vector<LaurentPoly> xs;
  for (int k = 1; k <= n + 1; ++k) {
    LaurentMonomial m(static_cast<std::size_t>(n), 0);
    if (k <= n) m[static_cast<std::size_t>(k - 1)] = 1;
    if (k >= 2) m[static_cast<std::size_t>(k - 2)] -= 1;
    xs.push_back(LaurentPoly::monomial(std::move(m), 1));
  }
  return xs;
}

// Elementary symmetric polynomials via the product prod (1 + x_i u), tracked
// degree by degree.
std::vector<LaurentPoly> elementary_symmetric(const std::vector<LaurentPoly>& xs, int rank) {
  std::vector<LaurentPoly> e(xs.size() + 1, LaurentPoly(rank));
  e[0] = LaurentPoly::constant(rank, 1);
  for (const auto& x : xs) {
    for (std::size_t k = std::min(e.size() - 1, xs.size()); k >= 1; --k)
      e[k] = e[k] + e[k - 1] * x;
  }
  return e;
}

}  // namespace

RootSystem build_root_system(RootLabel label) {
  RootSystem rs;
  rs.label = label;
  switch (label) {
    case RootLabel::A1:
      rs.rank = 1;
      rs.simple_roots = {{2}};
      rs.positive_roots = {{2}};
      rs.rho = {1};
      break;
    case RootLabel::A2:
      rs.rank = 2;
      rs.simple_roots = {{2, -1}, {-1, 2}};
      rs.positive_roots = {{2, -1}, {-1, 2}, {1, 1}};
      rs.rho = {1, 1};
      break;
    default:
      throw std::invalid_argument("unsupported root system label");
  }
  auto xs = eigenvalue_chart(rs.rank);
  auto e = elementary_symmetric(xs, rs.rank);
  for (int k = 1; k <= rs.rank; ++k) rs.fundamental_chars.push_back(e[static_cast<std::size_t>(k)]);
  return rs;
}

LaurentPoly weyl_delta(const RootSystem& rs) {
  LaurentMonomial minus_rho(rs.rho.size());
  for (std::size_t i = 0; i < rs.rho.size(); ++i) minus_rho[i] = -rs.rho[i];
  LaurentPoly acc = LaurentPoly::monomial(std::move(minus_rho), 1);
  for (const auto& alpha : rs.positive_roots)
    acc = acc * (LaurentPoly::monomial(alpha, 1) - LaurentPoly::constant(rs.rank, 1));
  return acc;
}

LaurentPoly weyl_discriminant(const RootSystem& rs) {
  LaurentPoly acc = LaurentPoly::constant(rs.rank, 1);
  for (const auto& alpha : rs.positive_roots) {
    LaurentMonomial neg(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
    acc = acc * (LaurentPoly::monomial(alpha, 1) - LaurentPoly::constant(rs.rank, 1));
    acc = acc * (LaurentPoly::monomial(std::move(neg), 1) - LaurentPoly::constant(rs.rank, 1));
  }
  return acc;
}

LaurentMonomial reflect_exponents(const RootSystem& rs, int i, const LaurentMonomial& e) {
  if (i < 1 || i > rs.rank) throw std::invalid_argument("reflection index out of range");
  const auto& alpha = rs.simple_roots[static_cast<std::size_t>(i - 1)];
  LaurentMonomial out = e;
  int coeff = e[static_cast<std::size_t>(i - 1)];
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= coeff * alpha[j];
  return out;
}

LaurentPoly reflect_poly(const RootSystem& rs, int i, const LaurentPoly& p) {
  LaurentPoly out(p.rank());
  for (const auto& [mono, coeff] : p.terms())
    out = out + LaurentPoly::monomial(reflect_exponents(rs, i, mono), coeff);
  return out;
}

const char* to_string(RootLabel label) {
  switch (label) {
    case RootLabel::A1: return "A1";
    case RootLabel::A2: return "A2";
  }
  return "?";
}

}  // namespace tracelab
