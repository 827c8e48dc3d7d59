#include "doctest.h"
#include "qflag/artheory.hpp"
#include "qflag/grassmann.hpp"
#include "support.hpp"

using namespace qflag;
using support::make_quiver;

namespace {

mpz_class power(long q, long e) {
  mpz_class r = 1;
  for (long i = 0; i < e; ++i) r *= q;
  return r;
}

}  // namespace

TEST_SUITE("grassmann") {
  TEST_CASE("gaussian binomials and subspace enumeration") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(3, 0, 5) == 1);
    CHECK(gaussian_binomial(2, 3, 2) == 0);
    for (uint32_t p : {2u, 3u})
      for (size_t n = 0; n <= 4; ++n)
        for (size_t k = 0; k <= n; ++k) {
          long c = 0;
          for_each_subspace(PrimeField(p), n, k, [&](const FMatrix& b) {
            CHECK(b.cols() == k);
            CHECK(rank(b) == k);
            ++c;
          });
          CHECK(gaussian_binomial((long)n, (long)k, p) == c);
        }
  }

  TEST_CASE("trivial dimension vectors") {
    const auto& ar = ar_quiver(support::data_quiver("D4"));
    auto eq = build_extended(ar.q, 2, false);
    for (const auto& n : ar.nodes) {
      auto t = phi(*reduce_mod(n.rep, PrimeField(3)), eq);
      CHECK(count_submodules(t, DimVec(t.dims.size(), 0)) == 1);
      CHECK(count_submodules(t, t.dims) == 1);
      auto over = t.dims;
      over[0] += 1;
      CHECK_THROWS_AS(count_submodules(t, over), std::invalid_argument);
    }
  }

  TEST_CASE("enumerated submodules are distinct and stable") {
    const auto& ar = ar_quiver(support::data_quiver("D4"));
    auto eq = build_extended(ar.q, 2, true);
    const auto& m = ar.nodes[ar.node(maximal_root(*ar.q))].rep;
    auto t = phi(*reduce_mod(m, PrimeField(2)), eq);
    for (const auto& f : all_dimvecs(t.dims)) {
      std::vector<FSub> seen;
      enumerate_submodules(t, f, [&](const FSub& u) {
        CHECK(is_subrep(t, u));
        CHECK(sub_dims(u) == f);
        for (const auto& v : seen) CHECK_FALSE(sub_equal(u, v));
        seen.push_back(u);
      });
      CHECK(count_submodules(t, f) == (long)seen.size());
    }
  }

  TEST_CASE("D4 maximal root: points of products of projective lines") {
    auto q = support::data_quiver("D4");
    const auto& ar = ar_quiver(q);
    const auto& m = ar.nodes[ar.node(maximal_root(*q))].rep;
    auto eq = build_extended(q, 1, false);
    for (uint32_t p : {2u, 3u}) {
      auto t = phi(*reduce_mod(m, PrimeField(p)), eq);
      for (const auto& f : all_dimvecs(t.dims)) {
        auto c = count_submodules(t, f);
        bool ok = false;
        for (long k = 0; k <= 4 && !ok; ++k) ok = c == power(p + 1, k);
        CHECK((ok || c == 0));
      }
      CHECK(count_submodules(t, {0, 1, 0, 0}) == p + 1);
    }
  }

  TEST_CASE("flag chains against submodules of phi") {
    for (auto name : {"A3", "D4"}) {
      const auto& ar = ar_quiver(support::data_quiver(name));
      for (bool strict : {false, true})
        for (int d : {1, 2}) {
          if (strict && d < 2) continue;
          auto eq = build_extended(ar.q, d, strict);
          for (const auto& n : ar.nodes) {
            auto m = *reduce_mod(n.rep, PrimeField(2));
            auto t = phi(m, eq);
            for (const auto& f : all_dimvecs(t.dims)) CHECK(count_flags_directly(m, d, strict, f) == count_submodules(t, f));
          }
        }
    }
  }

  TEST_CASE("decreasing flags are empty") {
    auto q = support::data_quiver("A3");
    const auto& ar = ar_quiver(q);
    auto m = *reduce_mod(ar.nodes[ar.node({1, 1, 1})].rep, PrimeField(3));
    CHECK(count_flags_directly(m, 2, false, {0, 0, 1, 0, 0, 0}) == 0);
    CHECK(count_flags_directly(m, 1, false, {0, 0, 1}) == count_submodules(phi(m, build_extended(q, 1, false)), {0, 0, 1}));
    CHECK_THROWS_AS(count_flags_directly(m, 1, true, {0, 0, 1}), std::invalid_argument);
  }

  TEST_CASE("budget") {
    auto q = support::data_quiver("D4");
    const auto& ar = ar_quiver(q);
    auto m = *reduce_mod(ar.nodes[ar.node(maximal_root(*q))].rep, PrimeField(3));
    auto eq = build_extended(q, 2, false);
    EnumOptions opt;
    opt.max_nodes = 1;
    CHECK_THROWS_AS(count_submodules(phi(m, eq), {0, 1, 0, 0, 1, 2, 1, 1}, opt), BudgetExceeded);
  }

  TEST_CASE("strata partition and the split formula") {
    auto q = support::data_quiver("D4");
    const auto& ar = ar_quiver(q);
    auto eq = build_extended(q, 2, false);
    PrimeField k(2);
    // Y = X + S split, X and S indecomposable with [S, X]^1 = 0.
    for (size_t xi = 0; xi < ar.nodes.size(); xi += 3)
      for (size_t si = 1; si < ar.nodes.size(); si += 4) {
        const auto& xr = ar.nodes[xi].rep;
        const auto& sr = ar.nodes[si].rep;
        if (ext1_dim(sr, xr) != 0) continue;
        auto sum = direct_sum(q, Rationals{}, {xr, sr});
        auto y = phi(*reduce_mod(sum.rep, k), eq);
        auto x = phi(*reduce_mod(xr, k), eq);
        auto s = phi(*reduce_mod(sr, k), eq);
        FSub xsub = *reduce_mod(image(phi(sum.incl[0], eq)), k);
        for (const auto& h : all_dimvecs(y.dims)) {
          auto strata = strata_counts(y, xsub, h);
          mpz_class all = 0;
          for (const auto& [fg, c] : strata) {
            all += c;
            const auto& [f, g] = fg;
            long r = euler_R(eq, g, vsub(x.dims, f));
            CHECK(c == power(2, r) * count_submodules(x, f) * count_submodules(s, g));
            CHECK(count_strata(y, xsub, f, g) == c);
          }
          CHECK(all == count_submodules(y, h));
          if (leq(h, x.dims)) CHECK(count_strata(y, xsub, h, DimVec(h.size(), 0)) == count_submodules(x, h));
        }
      }
  }

  TEST_CASE("interpolation") {
    auto p = interpolate_polynomial({{2, 9}, {3, 16}, {5, 36}}, 2);
    CHECK(p.coeffs == std::vector<mpq_class>{1, 2, 1});
    CHECK(p.integral);
    CHECK(p.nonnegative);
    CHECK(p.eval(7) == 64);
    auto z = interpolate_polynomial({{2, 0}, {3, 0}}, 1);
    CHECK(z.coeffs.empty());
    CHECK_THROWS_AS(interpolate_polynomial({{2, 1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(interpolate_polynomial({{2, 1}, {3, 2}, {5, 7}}, 1), std::invalid_argument);
    auto neg = interpolate_polynomial({{2, 1}, {3, 2}}, 1);
    CHECK_FALSE(neg.nonnegative);
  }

  TEST_CASE("counting records round-trip") {
    CountingRecord r{"E6", "(2;12321)", 1, false, {1, 1, 1, 0, 0, 1}, 3, mpz_class("123456789012345678901"), {1, 2, 1}};
    auto j = record_to_json(r);
    auto back = record_from_json(parse_json_text(j.dump(), "x"));
    CHECK(back.count == r.count);
    CHECK(back.f == r.f);
    CHECK(back.polynomial == r.polynomial);
    CHECK(record_to_json(back) == j);
  }

  TEST_CASE("dimension bound") {
    CHECK(grassmannian_dim_bound({2, 3}, {1, 1}) == 1 + 2);
    CHECK(all_dimvecs({1, 2}).size() == 6);
  }
}
