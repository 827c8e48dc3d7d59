#include <random>

#include "doctest.h"
#include "qflag/artheory.hpp"
#include "qflag/extended.hpp"
#include "qflag/grassmann.hpp"
#include "support.hpp"

using namespace qflag;
using support::make_quiver;

namespace {

// A random dimension vector for a module over R: levels non-decreasing is not required.
DimVec random_dims(const ExtendedQuiver& eq, std::mt19937_64& rng, long hi) {
  DimVec d(eq.quiver->num_vertices());
  for (auto& x : d) x = (long)(rng() % (hi + 1));
  return d;
}

}  // namespace

TEST_SUITE("extended") {
  TEST_CASE("extended quiver sizes") {
    auto a4 = make_quiver(4, {{1, 2}, {3, 2}, {3, 4}});
    auto eq = build_extended(a4, 3, false);
    CHECK(eq.quiver->num_vertices() == 12);
    CHECK(eq.quiver->num_arrows() == 17);
    CHECK(eq.virtuals.size() == 6);
    auto st = build_extended(a4, 3, true);
    CHECK(st.quiver->num_vertices() == 12);
    CHECK(st.quiver->num_arrows() == 14);
    CHECK(st.virtuals.size() == 3);
    auto one = build_extended(a4, 1, false);
    CHECK(one.quiver->num_arrows() == a4->num_arrows());
    CHECK(one.virtuals.empty());
    CHECK_THROWS_AS(build_extended(a4, 1, true), std::invalid_argument);
    CHECK_THROWS_AS(build_extended(a4, 0, false), std::invalid_argument);
  }

  TEST_CASE("virtual arrows identify two paths with common ends") {
    auto q = support::data_quiver("D4");
    for (bool strict : {false, true}) {
      auto eq = build_extended(q, 3, strict);
      const Quiver& x = *eq.quiver;
      for (const auto& c : eq.virtuals) {
        CHECK(x.arrow(c.first1).src == c.src);
        CHECK(x.arrow(c.first2).src == c.src);
        CHECK(x.arrow(c.second1).tgt == c.tgt);
        CHECK(x.arrow(c.second2).tgt == c.tgt);
        CHECK(x.arrow(c.first1).tgt == x.arrow(c.second1).src);
        CHECK(x.arrow(c.first2).tgt == x.arrow(c.second2).src);
        CHECK(c.first1 != c.first2);
        if (strict) {
          CHECK(eq.level(c.src) == eq.level(c.tgt));
        } else {
          CHECK(eq.level(c.tgt) == eq.level(c.src) + 1);
        }
      }
    }
  }

  TEST_CASE("phi") {
    auto q = support::data_quiver("A3");
    const auto& ar = ar_quiver(q);
    for (bool strict : {false, true}) {
      auto eq = build_extended(q, 2, strict);
      for (const auto& n : ar.nodes) {
        auto t = phi(n.rep, eq);
        CHECK(validate(t, eq).empty());
        CHECK(t.dims == phi_dims(eq, n.root));
        DimVec twice = n.root;
        twice.insert(twice.end(), n.root.begin(), n.root.end());
        CHECK(t.dims == twice);
      }
    }
    auto eq = build_extended(q, 2, false);
    CHECK(validate(zero_rep(eq.quiver, Rationals{}, DimVec(6, 0)), eq).empty());
    auto t = phi(ar.nodes[ar.node({1, 1, 1})].rep, eq);
    size_t a = eq.level_arrow(0, 2);
    t.maps[a](0, 0) += 1;
    auto bad = validate(t, eq);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == "c:a1@1");
  }

  TEST_CASE("phi of projectives and injectives") {
    auto q = support::data_quiver("A3");
    std::mt19937_64 rng(8);
    for (int d : {1, 2, 3}) {
      auto eq = build_extended(q, d, false);
      for (size_t i = 0; i < q->num_vertices(); ++i) {
        auto pp = phi(projective(q, i), eq);
        auto ii = phi(injective(q, i), eq);
        for (int t = 0; t < 6; ++t) {
          auto m = random_bound_module(eq, Rationals{}, random_dims(eq, rng, 2), rng);
          auto ep = ext_R_all(pp, m, eq);
          CHECK(ep[0] == m.dims[eq.vertex(i, 1)]);
          CHECK(ep[1] == 0);
          CHECK(ep[2] == 0);
          auto ei = ext_R_all(m, ii, eq);
          CHECK(ei[0] == m.dims[eq.vertex(i, d)]);
          CHECK(ei[1] == 0);
          CHECK(ei[2] == 0);
        }
      }
    }
  }

  TEST_CASE("phi is fully faithful and preserves Ext^1") {
    auto q = support::data_quiver("A3");
    const auto& ar = ar_quiver(q);
    for (bool strict : {false, true}) {
      auto eq = build_extended(q, 2, strict);
      for (const auto& a : ar.nodes)
        for (const auto& b : ar.nodes) {
          auto e = ext_R_all(phi(a.rep, eq), phi(b.rep, eq), eq);
          CHECK(e[0] == (long)hom_dim(a.rep, b.rep));
          CHECK(e[0] == (long)hom_dim(phi(a.rep, eq), phi(b.rep, eq)));
          CHECK(e[1] == ext1_dim(a.rep, b.rep));
          CHECK(e[2] == 0);
        }
    }
    auto eq = build_extended(q, 2, false);
    CHECK(hom_dim(phi(simple_rep(q, 0), eq), phi(simple_rep(q, 1), eq)) == 0);
  }

  TEST_CASE("projective and injective dimension of phi(M) at most one") {
    auto q = support::data_quiver("D4");
    const auto& ar = ar_quiver(q);
    std::mt19937_64 rng(21);
    for (bool strict : {false, true}) {
      auto eq = build_extended(q, 2, strict);
      for (const auto& n : ar.nodes) {
        auto pm = phi(n.rep, eq);
        for (int t = 0; t < 3; ++t) {
          auto m = random_bound_module(eq, Rationals{}, random_dims(eq, rng, 2), rng);
          CHECK(ext_R(pm, m, eq, 2) == 0);
          CHECK(ext_R(m, pm, eq, 2) == 0);
        }
      }
    }
  }

  TEST_CASE("euler form of R against Ext dimensions") {
    auto q = support::data_quiver("A2");
    std::mt19937_64 rng(4);
    for (int d : {1, 2, 3})
      for (bool strict : {false, true}) {
        if (strict && d < 2) continue;
        auto eq = build_extended(q, d, strict);
        for (int t = 0; t < 20; ++t) {
          auto a = random_bound_module(eq, Rationals{}, random_dims(eq, rng, 2), rng);
          auto b = random_bound_module(eq, Rationals{}, random_dims(eq, rng, 2), rng);
          CHECK(validate(a, eq).empty());
          auto e = ext_R_all(a, b, eq);
          CHECK(euler_R(eq, a.dims, b.dims) == e[0] - e[1] + e[2]);
        }
      }
  }

  TEST_CASE("ext degree guard") {
    auto q = support::data_quiver("A2");
    auto eq = build_extended(q, 2, false);
    auto t = phi(simple_rep(q, 0), eq);
    CHECK_THROWS_AS(ext_R(t, t, eq, 3), std::invalid_argument);
  }

  TEST_CASE("phi is exact on short exact sequences") {
    auto q = support::data_quiver("E6");
    const auto& ar = ar_quiver(q);
    auto eq = build_extended(q, 2, false);
    for (size_t x = 0; x < ar.nodes.size(); ++x) {
      if (ar.nodes[x].projective) continue;
      auto s = ar_sequence(ar, x);
      auto a = phi(ar.nodes[s.left].rep, eq), b = phi(s.middle_rep, eq), c = phi(ar.nodes[s.right].rep, eq);
      CHECK(b.dims == vadd(a.dims, c.dims));
      CHECK(is_injective(phi(s.f, eq)));
      CHECK(is_surjective(phi(s.g, eq)));
      CHECK(rank_vector(phi(s.f, eq)) == a.dims);
    }
  }

  TEST_CASE("bound module JSON") {
    auto q = support::data_quiver("A3");
    auto eq = build_extended(q, 2, true);
    const auto& ar = ar_quiver(q);
    auto t = phi(ar.nodes[ar.node({1, 1, 1})].rep, eq);
    auto j = bound_module_to_json(t, eq);
    CHECK(j["dims"].contains("2@2"));
    auto back = bound_module_from_json(parse_json_text(j.dump(), "x"), eq);
    CHECK(back.dims == t.dims);
    for (size_t a = 0; a < t.maps.size(); ++a) CHECK(back.maps[a] == t.maps[a]);
    auto eq2 = build_extended(q, 2, false);
    auto t2 = phi(ar.nodes[ar.node({1, 1, 1})].rep, eq2);
    auto j2 = bound_module_to_json(t2, eq2);
    j2["maps"]["a1@2"][0][0] = 5;
    CHECK_THROWS_WITH_AS(bound_module_from_json(j2, eq2), doctest::Contains("relation"), ParseError);
  }
}
