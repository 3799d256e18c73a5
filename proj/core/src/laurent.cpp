#include "tracelab/laurent.hpp"

#include <sstream>

namespace tracelab {

namespace {

void check_same_rank(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
}

}  // namespace

LaurentPoly LaurentPoly::constant(int rank, Int c) {
  LaurentPoly p(rank);
  p.set_term(LaurentMonomial(static_cast<std::size_t>(rank), 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::coordinate(int rank, int j) {
  if (j < 1 || j > rank) throw std::invalid_argument("coordinate index out of range");
  LaurentMonomial m(static_cast<std::size_t>(rank), 0);
  m[static_cast<std::size_t>(j - 1)] = 1;
  return monomial(std::move(m), 1);
}

LaurentPoly LaurentPoly::monomial(LaurentMonomial exponents, Int c) {
  LaurentPoly p(static_cast<int>(exponents.size()));
  p.set_term(std::move(exponents), std::move(c));
  return p;
}

void LaurentPoly::set_term(LaurentMonomial m, Int c) {
  if (static_cast<int>(m.size()) != rank_)
    throw std::invalid_argument("monomial length must equal rank");
  if (c == 0)
    terms_.erase(m);
  else
    terms_[std::move(m)] = std::move(c);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_rank(*this, o);
  LaurentPoly r = *this;
  for (const auto& [mono, coeff] : o.terms_) {
    auto it = r.terms_.find(mono);
    if (it == r.terms_.end()) {
      r.terms_.emplace(mono, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(rank_);
  for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono, -coeff);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_rank(*this, o);
  LaurentPoly r(rank_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      LaurentMonomial m(static_cast<std::size_t>(rank_));
      for (int j = 0; j < rank_; ++j)
        m[static_cast<std::size_t>(j)] = ma[static_cast<std::size_t>(j)] + mb[static_cast<std::size_t>(j)];
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        Int c = ca * cb;
        if (c != 0) r.terms_.emplace(std::move(m), std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly LaurentPoly::log_derive(int j) const {
  if (j < 1 || j > rank_) throw std::invalid_argument("derivation index out of range");
  LaurentPoly r(rank_);
  for (const auto& [mono, coeff] : terms_) {
    int e = mono[static_cast<std::size_t>(j - 1)];
    if (e != 0) r.terms_.emplace(mono, coeff * e);
  }
  return r;
}

namespace {

LaurentPoly det_recursive(const std::vector<std::vector<LaurentPoly>>& m,
                          const std::vector<int>& cols, std::size_t row, int rank) {
  if (cols.size() == 1)
    return m[row][static_cast<std::size_t>(cols[0])];
  LaurentPoly acc(rank);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    LaurentPoly minor = det_recursive(m, rest, row + 1, rank);
    LaurentPoly term = m[row][static_cast<std::size_t>(cols[k])] * minor;
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

LaurentPoly jacobian_log_det(std::span<const LaurentPoly> polys) {
  if (polys.empty()) throw std::invalid_argument("need at least one polynomial");
  const int r = polys[0].rank();
  if (static_cast<int>(polys.size()) != r)
    throw std::invalid_argument("need exactly rank-many polynomials");
  std::vector<std::vector<LaurentPoly>> m;
  m.reserve(polys.size());
  for (const auto& p : polys) {
    if (p.rank() != r) throw std::invalid_argument("rank mismatch");
    std::vector<LaurentPoly> row;
    row.reserve(static_cast<std::size_t>(r));
    for (int j = 1; j <= r; ++j) row.push_back(p.log_derive(j));
    m.push_back(std::move(row));
  }
  std::vector<int> cols(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) cols[static_cast<std::size_t>(j)] = j;
  return det_recursive(m, cols, 0, r);
}

LaurentPoly inverse(const LaurentPoly& p) {
  if (p.term_count() != 1) throw std::domain_error("element not invertible");
  const auto& [mono, coeff] = *p.terms().begin();
  if (coeff != 1 && coeff != -1) throw std::domain_error("element not invertible");
  LaurentMonomial neg(mono.size());
  for (std::size_t i = 0; i < mono.size(); ++i) neg[i] = -mono[i];
  return LaurentPoly::monomial(std::move(neg), coeff);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Reverse iteration gives descending lex order on exponent vectors.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, coeff] = *it;
    Int a = coeff;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    std::string vars;
    for (int j = 0; j < rank_; ++j) {
      int e = mono[static_cast<std::size_t>(j)];
      if (e == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += rank_ == 1 ? "x" : "x" + std::to_string(j + 1);
      if (e != 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << vars;
    }
  }
  return os.str();
}

}  // namespace tracelab
