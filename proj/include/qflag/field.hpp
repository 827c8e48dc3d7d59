#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qflag {

// Exact rationals; gmp keeps values canonical (lowest terms, positive denominator).
struct Rationals {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem div(const Elem& a, const Elem& b) const {
    if (sgn(b) == 0) throw std::domain_error("division by zero");
    return a / b;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.get_str(); }
  uint64_t modulus() const { return 0; }
  bool operator==(const Rationals&) const { return true; }
};

// Prime field F_p. Residues are kept in [0, p).
struct PrimeField {
  using Elem = uint32_t;

  uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(uint32_t prime) : p(prime) {
    if (prime < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    for (uint32_t d = 2; (uint64_t)d * d <= prime; ++d)
      if (prime % d == 0) throw std::invalid_argument("modulus must be prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const {
    long r = v % (long)p;
    return (Elem)(r < 0 ? r + p : r);
  }
  Elem add(Elem a, Elem b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return (Elem)((uint64_t)a * b % p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return (Elem)r;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }
  uint64_t modulus() const { return p; }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

// Reduction of a rational into F_p; fails when p divides the denominator.
inline bool reduce_mod(const mpq_class& q, const PrimeField& f, uint32_t& out) {
  mpz_class den = q.get_den() % f.p;
  if (den == 0) return false;
  mpz_class num = q.get_num() % f.p;
  if (num < 0) num += f.p;
  out = f.div((uint32_t)num.get_ui(), (uint32_t)den.get_ui());
  return true;
}

}  // namespace qflag
