#pragma once

#include <ostream>

#include "tracelab/numeric.hpp"

namespace tracelab {

// Element of Z/m with exact arithmetic.  Inversion exists only for residues
// coprime to the modulus; Laurent polynomial evaluation relies on it.
class Zmod {
 public:
  Zmod() : value_(0), modulus_(0) {}
  Zmod(Int value, Int modulus) : value_(std::move(value)), modulus_(std::move(modulus)) {
    if (modulus_ <= 0) throw std::invalid_argument("modulus must be positive");
    normalize();
  }

  const Int& value() const { return value_; }
  const Int& modulus() const { return modulus_; }

  Zmod operator+(const Zmod& o) const { return {value_ + o.checked(modulus_), modulus_}; }
  Zmod operator-(const Zmod& o) const { return {value_ - o.checked(modulus_), modulus_}; }
  Zmod operator*(const Zmod& o) const { return {value_ * o.checked(modulus_), modulus_}; }
  Zmod operator-() const { return {-value_, modulus_}; }

  Zmod inverse() const { return {mod_inverse(value_, modulus_), modulus_}; }

  bool operator==(const Zmod& o) const {
    return modulus_ == o.modulus_ && value_ == o.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Zmod& z) {
    return os << z.value_ << " (mod " << z.modulus_ << ")";
  }

 private:
  void normalize() {
    value_ %= modulus_;
    if (value_ < 0) value_ += modulus_;
  }
  const Int& checked(const Int& m) const {
    if (modulus_ != m) throw std::invalid_argument("modulus mismatch");
    return value_;
  }

  Int value_;
  Int modulus_;
};

inline Zmod inverse(const Zmod& z) { return z.inverse(); }

}  // namespace tracelab
