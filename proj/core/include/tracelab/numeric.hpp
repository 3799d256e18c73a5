#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tracelab {

// All identity checks in this library are exact; coefficients and masses are
// arbitrary-precision integers and rationals throughout.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_regular_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct model_degree_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int int_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// p^n as a machine word; the counting kernels require p^n <= 2^27 so that a
// per-residue tally never overflows 64 bits.
inline std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base)
      throw std::overflow_error("pow_u64 overflow");
    r *= base;
  }
  return r;
}

inline std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, b = a % m;
  while (e) {
    if (e & 1u) r = r * b % m;
    b = b * b % m;
    e >>= 1u;
  }
  return static_cast<std::uint64_t>(r);
}

// Euler criterion; p an odd prime, a not divisible by p.
inline bool is_quadratic_residue(std::uint64_t a, std::uint64_t p) {
  return mod_pow(a % p, (p - 1) / 2, p) == 1;
}

inline int valuation(Int n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = a % m, r = m, old_s = 1, s = 0;
  if (old_r < 0) old_r += m;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("element not invertible");
  old_s %= m;
  if (old_s < 0) old_s += m;
  return old_s;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<bool> sieve(static_cast<std::size_t>(std::max<std::int64_t>(n + 1, 2)), true);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

inline std::vector<std::int64_t> odd_primes_up_to(std::int64_t n) {
  auto ps = primes_up_to(n);
  if (!ps.empty() && ps.front() == 2) ps.erase(ps.begin());
  return ps;
}

inline double to_double(const Rat& r) {
  return r.convert_to<double>();
}

// Bit-exact rendering used in JSON/CSV records.
inline std::string rat_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

}  // namespace tracelab
