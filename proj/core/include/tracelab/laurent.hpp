#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tracelab/numeric.hpp"
#include "tracelab/residue.hpp"

namespace tracelab {

// Exponent vector of a single monomial in the torus coordinates; entries may
// be negative.  Length always equals the rank of the ambient polynomial.
using LaurentMonomial = std::vector<int>;

// Multivariate Laurent polynomial with arbitrary-precision integer
// coefficients.  Zero coefficients are never stored, so equality of term maps
// is equality of polynomials.
class LaurentPoly {
 public:
  using TermMap = std::map<LaurentMonomial, Int>;

  explicit LaurentPoly(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
  }

  static LaurentPoly constant(int rank, Int c);
  // The coordinate function xi_j, 1-based.
  static LaurentPoly coordinate(int rank, int j);
  static LaurentPoly monomial(LaurentMonomial exponents, Int c);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  // xi_j d/dxi_j: the derivation of the invariant frame; kills constants and
  // scales each term by its j-th exponent.  j is 1-based.
  LaurentPoly log_derive(int j) const;

  // Exact substitution over any commutative ring with ADL-visible inverse().
  // Every coordinate must be invertible when negative exponents occur.
  template <class T>
  T evaluate(const std::vector<T>& point) const;

  // Canonical rendering: terms in descending lexicographic order of exponent
  // vectors, explicit signs.  Used by the golden-file tests.
  std::string to_string() const;

  void set_term(LaurentMonomial m, Int c);

 private:
  int rank_;
  TermMap terms_;
};

// Determinant of the r x r matrix [xi_j d/dxi_j (p_i)] by cofactor expansion,
// exact over the polynomial ring.
LaurentPoly jacobian_log_det(std::span<const LaurentPoly> polys);

inline Rat inverse(const Rat& r) {
  if (r == 0) throw std::domain_error("element not invertible");
  return 1 / r;
}
inline std::complex<double> inverse(const std::complex<double>& z) {
  if (z == std::complex<double>(0.0, 0.0)) throw std::domain_error("element not invertible");
  return 1.0 / z;
}

inline Rat embed_int(const Int& c, const Rat&) { return Rat(c); }
inline Zmod embed_int(const Int& c, const Zmod& model) { return Zmod(c, model.modulus()); }
inline std::complex<double> embed_int(const Int& c, const std::complex<double>&) {
  return {c.convert_to<double>(), 0.0};
}
inline LaurentPoly embed_int(const Int& c, const LaurentPoly& model) {
  return LaurentPoly::constant(model.rank(), c);
}
// Only monomials with coefficient +-1 are units of the Laurent ring.
LaurentPoly inverse(const LaurentPoly& p);

template <class T>
T LaurentPoly::evaluate(const std::vector<T>& point) const {
  if (static_cast<int>(point.size()) != rank_)
    throw std::invalid_argument("point length must equal rank");
  T result = embed_int(Int(0), point[0]);
  for (const auto& [mono, coeff] : terms_) {
    T term = embed_int(coeff, point[0]);
    for (int j = 0; j < rank_; ++j) {
      int e = mono[j];
      T base = e >= 0 ? point[j] : inverse(point[j]);
      for (int k = 0; k < std::abs(e); ++k) term = term * base;
    }
    result = result + term;
  }
  return result;
}

}  // namespace tracelab
