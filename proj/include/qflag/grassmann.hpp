#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qflag/extended.hpp"
#include "qflag/rep.hpp"

namespace qflag {

using FSub = Subspaces<PrimeField>;
using FMorphism = Morphism<PrimeField>;

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(uint64_t n)
      : std::runtime_error("budget exceeded after " + std::to_string(n) + " search nodes") {}
};

// Node-visit cap; QP_MAX_NODES overrides the default.
uint64_t default_max_nodes();

struct EnumOptions {
  uint64_t max_nodes = default_max_nodes();
  // Optional per-vertex bounds lower_v <= U_v <= upper_v (spanning columns).
  const FSub* lower = nullptr;
  const FSub* upper = nullptr;
  // Shared visit counter so nested searches draw on one budget.
  uint64_t* used = nullptr;
};

mpz_class gaussian_binomial(long n, long k, uint32_t p);

// Visits every k-dimensional subspace of F_p^n once, as its reduced column echelon basis.
void for_each_subspace(const PrimeField& k, size_t n, size_t dim, const std::function<void(const FMatrix&)>& visit);

// Every subrepresentation U of t with dim U = f, exactly once.
void enumerate_submodules(const FRep& t, const DimVec& f, const std::function<void(const FSub&)>& visit,
                          const EnumOptions& opt = {});
mpz_class count_submodules(const FRep& t, const DimVec& f, const EnumOptions& opt = {});

// Chains 0 <= M_1 <= ... <= M_d <= M of subrepresentations with dim M_k = level k of f;
// strict chains additionally satisfy x.M_{k+1} <= M_k for every arrow x.
mpz_class count_flags_directly(const FRep& m, int d, bool strict, const DimVec& f, const EnumOptions& opt = {});

// Submodules U of y with dim(U cap x) = f and dim of the image in y/x equal to g.
mpz_class count_strata(const FRep& y, const FSub& x, const DimVec& f, const DimVec& g, const EnumOptions& opt = {});
// All strata of Gr_h(y) keyed by (f, g).
std::map<std::pair<DimVec, DimVec>, mpz_class> strata_counts(const FRep& y, const FSub& x, const DimVec& h,
                                                              const EnumOptions& opt = {});

// Every dimension vector 0 <= f <= bound.
std::vector<DimVec> all_dimvecs(const DimVec& bound);

struct CountingRecord {
  std::string quiver;
  std::string rep;
  int d = 1;
  bool strict = false;
  DimVec f;
  uint32_t p = 2;
  mpz_class count;
  std::vector<mpz_class> polynomial;  // optional, lowest degree first
};

struct Polynomial {
  std::vector<mpq_class> coeffs;  // lowest degree first, trailing zeros trimmed
  bool integral = false;
  bool nonnegative = false;
  mpz_class eval(long q) const;
};

// Unique polynomial of degree <= degree through the given points.
Polynomial interpolate_polynomial(const std::vector<std::pair<long, mpz_class>>& points, long degree);

// sum over extended vertices of f_v (dim_v - f_v).
long grassmannian_dim_bound(const DimVec& dims, const DimVec& f);

}  // namespace qflag
