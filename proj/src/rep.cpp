#include "qflag/rep.hpp"

namespace qflag {

long branch_vertex(const Quiver& q) {
  auto shape = classify(q);
  if (shape.family != Family::E) throw std::invalid_argument("ord_e needs a quiver of type E");
  return shape.branch;
}

bool prime_is_safe(const QRep& m, uint32_t p) {
  PrimeField f(p);
  auto r = reduce_mod(m, f);
  if (!r) return false;
  return hom_dim(*r, *r) == hom_dim(m, m);
}

uint32_t next_prime(uint32_t p) {
  for (uint32_t c = p + 1;; ++c) {
    bool prime = c >= 2;
    for (uint32_t d = 2; d * d <= c && prime; ++d)
      if (c % d == 0) prime = false;
    if (prime) return c;
  }
}

std::vector<uint32_t> safe_primes(const std::vector<const QRep*>& reps, size_t count, uint32_t start) {
  std::vector<uint32_t> out;
  uint32_t p = start < 2 ? 2 : start;
  bool is_prime = true;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) is_prime = false;
  if (!is_prime) p = next_prime(p);
  while (out.size() < count) {
    bool ok = true;
    for (const auto* r : reps)
      if (!prime_is_safe(*r, p)) ok = false;
    if (ok) out.push_back(p);
    p = next_prime(p);
  }
  return out;
}

QRep simple_rep(const QuiverPtr& q, size_t v) {
  DimVec d(q->num_vertices(), 0);
  d[v] = 1;
  return zero_rep(q, Rationals{}, d);
}

}  // namespace qflag
