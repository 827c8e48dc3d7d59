#include <algorithm>

#include "doctest.h"
#include "qflag/artheory.hpp"
#include "qflag/extended.hpp"
#include "qflag/grassmann.hpp"
#include "support.hpp"

using namespace qflag;
using support::make_quiver;

namespace {

DimVec root_of(const ARQuiver& ar, const std::string& label) { return parse_dimvec(ar.shape, label); }

QRep quotient_by_mono(const ARQuiver& ar, const SectionalMono& m) {
  return quotient(ar.nodes[m.y].rep, image(m.path.composite)).rep;
}

QMatrix flatten(const QMorphism& f) {
  size_t n = 0;
  for (const auto& c : f.comp) n += c.rows() * c.cols();
  QMatrix v(Rationals{}, n, 1);
  size_t k = 0;
  for (const auto& c : f.comp)
    for (size_t i = 0; i < c.rows(); ++i)
      for (size_t j = 0; j < c.cols(); ++j) v(k++, 0) = c(i, j);
  return v;
}

bool has_arrow(const ARQuiver& ar, size_t a, size_t b) {
  for (auto i : ar.out[a])
    if (ar.arrows[i].to == b) return true;
  return false;
}

}  // namespace

TEST_SUITE("artheory") {
  TEST_CASE("knit E6 in the data orientation") {
    const auto& ar = ar_quiver(support::data_quiver("E6"));
    CHECK(ar.nodes.size() == 36);
    size_t proj = 0, nontau = 0;
    for (const auto& n : ar.nodes) {
      proj += n.projective;
      nontau += n.tau < 0;
    }
    CHECK(proj == 6);
    CHECK(nontau == 6);
    auto dot = to_dot(ar);
    size_t dashed = 0;
    for (size_t pos = 0; (pos = dot.find("style=dashed", pos)) != std::string::npos; ++pos) ++dashed;
    CHECK(dashed == 30);
  }

  TEST_CASE("knit A2") {
    auto q = make_quiver(2, {{1, 2}});
    const auto& ar = ar_quiver(q);
    REQUIRE(ar.nodes.size() == 3);
    size_t p2 = ar.node({0, 1}), p1 = ar.node({1, 1}), s1 = ar.node({1, 0});
    CHECK(ar.arrows.size() == 2);
    CHECK(has_arrow(ar, p2, p1));
    CHECK(has_arrow(ar, p1, s1));
    CHECK(ar.nodes[s1].tau == (long)p2);
    CHECK(tau(simple_rep(q, 0)).dims == DimVec{0, 1});
    CHECK_THROWS_AS(knit(support::data_quiver("affD4")), std::invalid_argument);
  }

  TEST_CASE("knitted matrices are integral") {
    for (auto name : {"E6", "E7"}) {
      const auto& ar = ar_quiver(support::data_quiver(name));
      for (const auto& n : ar.nodes)
        for (const auto& m : n.rep.maps)
          for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) CHECK(m(i, j).get_den() == 1);
    }
  }

  TEST_CASE("translates") {
    auto q = support::data_quiver("E6");
    const auto& ar = ar_quiver(q);
    const auto& x = ar.nodes[ar.node(root_of(ar, "(1;12221)"))].rep;
    CHECK(ar.label(tau(x).dims) == "(2;12321)");
    for (const auto& n : ar.nodes) {
      if (n.projective) {
        CHECK_THROWS_AS(tau(n.rep), std::invalid_argument);
      } else {
        auto t = tau(n.rep);
        CHECK(t.dims == ar.nodes[n.tau].root);
        CHECK(decompose(tau_inv(t)) == std::map<DimVec, long>{{n.root, 1}});
      }
      if (n.injective) CHECK_THROWS_AS(tau_inv(n.rep), std::invalid_argument);
    }
  }

  TEST_CASE("AR sequences") {
    const auto& ar = ar_quiver(support::data_quiver("E6"));
    auto s = ar_sequence(ar, ar.node(root_of(ar, "(1;12221)")));
    CHECK(ar.label(s.left) == "(2;12321)");
    std::vector<std::string> mid;
    for (auto m : s.middle) mid.push_back(ar.label(m));
    std::sort(mid.begin(), mid.end());
    CHECK(mid == std::vector<std::string>{"(1;01221)", "(1;11110)", "(1;12211)"});

    auto a2 = make_quiver(2, {{1, 2}});
    const auto& ar2 = ar_quiver(a2);
    auto t = ar_sequence(ar2, ar2.node({1, 0}));
    CHECK(ar2.nodes[t.left].root == DimVec{0, 1});
    REQUIRE(t.middle.size() == 1);
    CHECK(ar2.nodes[t.middle[0]].root == DimVec{1, 1});
    CHECK_THROWS_AS(ar_sequence(ar2, ar2.node({0, 1})), std::invalid_argument);
  }

  TEST_CASE("every AR sequence is exact and nonsplit") {
    for (auto name : {"D4", "E6", "E7"}) {
      const auto& ar = ar_quiver(support::data_quiver(name));
      for (size_t x = 0; x < ar.nodes.size(); ++x) {
        if (ar.nodes[x].projective) continue;
        auto s = ar_sequence(ar, x);
        CHECK(is_exact(ar.nodes[s.left].rep, s.middle_rep, ar.nodes[s.right].rep, s.f, s.g));
        std::map<DimVec, long> split{{ar.nodes[s.left].root, 1}};
        split[ar.nodes[x].root] += 1;
        CHECK(decompose(s.middle_rep) != split);
      }
    }
  }

  TEST_CASE("the right map of an AR sequence is right almost split") {
    for (auto name : {"A2", "D4", "E6"}) {
      const auto& ar = ar_quiver(support::data_quiver(name));
      for (size_t x = 0; x < ar.nodes.size(); ++x) {
        if (ar.nodes[x].projective) continue;
        auto s = ar_sequence(ar, x);
        for (size_t n = 0; n < ar.nodes.size(); ++n) {
          if (n == x) continue;
          std::vector<QMatrix> cols;
          for (const auto& u : hom_space(ar.nodes[n].rep, s.middle_rep)) cols.push_back(flatten(compose(s.g, u)));
          long r = cols.empty() ? 0 : (long)rank(QMatrix::hstack(Rationals{}, cols[0].rows(), cols));
          for (const auto& h : hom_space(ar.nodes[n].rep, ar.nodes[x].rep)) {
            auto with = cols;
            with.push_back(flatten(h));
            CHECK((long)rank(QMatrix::hstack(Rationals{}, with[0].rows(), with)) == r);
          }
        }
      }
    }
  }

  TEST_CASE("AR formula") {
    for (auto name : {"A4", "D4", "E6"}) {
      const auto& ar = ar_quiver(support::data_quiver(name));
      for (const auto& a : ar.nodes)
        for (const auto& b : ar.nodes) {
          long lhs = ext1_dim(a.rep, b.rep);
          long rhs = a.projective ? 0 : (long)hom_dim(b.rep, ar.nodes[a.tau].rep);
          CHECK(lhs == rhs);
        }
    }
  }

  TEST_CASE("irreducible_dim matches the knitted arrows") {
    auto a2 = make_quiver(2, {{1, 2}});
    const auto& ar2 = ar_quiver(a2);
    const auto& s = ar2.nodes[ar2.node({1, 0})].rep;
    CHECK(irreducible_dim(ar2, s, s) == 0);
    for (auto name : {"D4", "E6"}) {
      const auto& ar = ar_quiver(support::data_quiver(name));
      for (size_t a = 0; a < ar.nodes.size(); ++a)
        for (size_t b = 0; b < ar.nodes.size(); ++b)
          CHECK(irreducible_dim(ar, ar.nodes[a].rep, ar.nodes[b].rep) == (has_arrow(ar, a, b) ? 1 : 0));
    }
  }

  TEST_CASE("sectional paths") {
    const auto& ar = ar_quiver(support::data_quiver("E6"));
    auto y = ar.node(root_of(ar, "(1;11110)"));
    auto ms = minimal_sectional_monos(ar, y);
    bool found = false;
    for (const auto& m : ms) found = found || ar.label(m.x) == "(1;00110)";
    CHECK(found);

    auto y2 = ar.node(root_of(ar, "(1;01211)"));
    auto x2 = ar.node(root_of(ar, "(0;01100)"));
    bool sectional_mono = false;
    for (const auto& p : sectional_paths_into(ar, y2))
      if (p.nodes.front() == x2 && is_injective(p.composite)) sectional_mono = true;
    CHECK(sectional_mono);
    for (const auto& m : minimal_sectional_monos(ar, y2)) CHECK(m.x != x2);

    for (size_t t = 0; t < ar.nodes.size(); ++t)
      for (const auto& p : sectional_paths_into(ar, t)) {
        CHECK((is_injective(p.composite) || is_surjective(p.composite)));
        for (size_t i = 0; i + 2 < p.nodes.size(); ++i) CHECK(ar.nodes[p.nodes[i + 2]].tau != (long)p.nodes[i]);
      }
  }

  TEST_CASE("minimal sectional mono selection in E7") {
    const auto& ar = ar_quiver(support::data_quiver("E7"));
    auto y = ar.node(root_of(ar, "(1;122321)"));
    auto m = find_minimal_sectional_mono(ar, y);
    REQUIRE(m);
    CHECK(ar.label(m->x) == "(1;112321)");
    CHECK(is_injective(m->path.composite));
    CHECK(rank_vector(m->path.composite) == ar.nodes[m->x].root);
  }

  TEST_CASE("quotients of minimal sectional monos have small branch dimension") {
    for (auto name : {"E6", "E7"}) {
      const auto& ar = ar_quiver(support::data_quiver(name));
      for (size_t y = 0; y < ar.nodes.size(); ++y) {
        if (ord(ar.nodes[y].rep) <= 2) continue;
        auto m = find_minimal_sectional_mono(ar, y);
        REQUIRE(m);
        CHECK(ord_e(quotient_by_mono(ar, *m)) <= 2);
      }
    }
  }

  TEST_CASE("X_S and S^X in the E7 configuration") {
    const auto& ar = ar_quiver(support::data_quiver("E7"));
    auto y = ar.node(root_of(ar, "(1;122321)"));
    auto m = find_minimal_sectional_mono(ar, y);
    REQUIRE(m);
    const auto& x = ar.nodes[m->x].rep;
    auto s = quotient_by_mono(ar, *m);
    auto xs = sub_rep(x, compute_X_S(x, s));
    CHECK(decompose(xs) ==
          std::map<DimVec, long>{{root_of(ar, "(1;111210)"), 1}, {root_of(ar, "(0;000111)"), 1}});
    CHECK(sub_equal(compute_S_X(x, s), full_subspaces(s)));
    const auto& p = ar.nodes[0];
    REQUIRE(p.projective);
    CHECK_THROWS_AS(compute_X_S(x, p.rep), std::invalid_argument);
  }

  TEST_CASE("S^X = S for every minimal sectional mono") {
    for (auto name : {"E6", "E7"}) {
      const auto& ar = ar_quiver(support::data_quiver(name));
      for (size_t y = 0; y < ar.nodes.size(); ++y)
        for (const auto& m : minimal_sectional_monos(ar, y)) {
          auto s = quotient_by_mono(ar, m);
          const auto& x = ar.nodes[m.x].rep;
          if (ext1_dim(s, x) != 1) continue;
          CHECK(sub_equal(compute_S_X(x, s), full_subspaces(s)));
        }
    }
  }

  TEST_CASE("X_S and S^X against brute-force maximisation over F_2") {
    // X_S: largest M in X with [S, X/M]^1 = 1; S^X: largest M in S with [M, X]^1 = 1.
    PrimeField f2(2);
    for (auto name : {"D4", "E6"}) {
      const auto& ar = ar_quiver(support::data_quiver(name));
      size_t checked = 0;
      for (size_t y = 0; y < ar.nodes.size() && checked < 12; ++y)
        for (const auto& m : minimal_sectional_monos(ar, y)) {
          const auto& xq = ar.nodes[m.x].rep;
          auto sq = quotient_by_mono(ar, m);
          if (ext1_dim(sq, xq) != 1 || ar.nodes[m.x].injective) continue;
          ++checked;
          auto x = *reduce_mod(xq, f2);
          auto s = *reduce_mod(sq, f2);
          long best = -1;
          FSub arg;
          for (const auto& f : all_dimvecs(x.dims))
            enumerate_submodules(x, f, [&](const FSub& u) {
              if (ext1_dim(s, quotient(x, u).rep) == 1 && total(f) > best) {
                best = total(f);
                arg = u;
              }
            });
          auto xs = reduce_mod(compute_X_S(xq, sq), f2);
          REQUIRE(xs);
          CHECK(total(sub_dims(*xs)) == best);
          CHECK(sub_equal(*xs, arg));

          best = -1;
          for (const auto& f : all_dimvecs(s.dims))
            enumerate_submodules(s, f, [&](const FSub& u) {
              if (ext1_dim(sub_rep(s, u), x) == 1 && total(f) > best) {
                best = total(f);
                arg = u;
              }
            });
          auto sx = reduce_mod(compute_S_X(xq, sq), f2);
          REQUIRE(sx);
          CHECK(sub_equal(*sx, arg));
        }
      CHECK(checked > 0);
    }
  }

  TEST_CASE("Hom/Ext table for the E7 configuration") {
    const auto& ar = ar_quiver(support::data_quiver("E7"));
    auto y = ar.node(root_of(ar, "(1;122321)"));
    auto m = find_minimal_sectional_mono(ar, y);
    REQUIRE(m);
    auto t = hom_ext_table(ar.nodes[m->x].rep, ar.nodes[y].rep, quotient_by_mono(ar, *m));
    CHECK(t == expected_mono_table());
    const auto& e = expected_mono_table();
    CHECK(e.hom[0][0] == 1);
    CHECK(e.hom[0][1] == 1);
    CHECK(e.hom[0][2] == 0);
    CHECK(e.hom[1][1] == 1);
    CHECK(e.hom[1][2] == 1);
    CHECK(e.hom[2][2] == 1);
    CHECK(e.ext[2][0] == 1);
  }

  TEST_CASE("phi commutes with the kernel defining X_S") {
    const auto& ar = ar_quiver(support::data_quiver("E6"));
    auto y = ar.node(maximal_root(*ar.q));
    auto m = find_minimal_sectional_mono(ar, y);
    REQUIRE(m);
    const auto& x = ar.nodes[m->x].rep;
    auto s = quotient_by_mono(ar, *m);
    auto ts = tau(s);
    auto h = hom_space(x, ts);
    REQUIRE(h.size() == 1);
    auto xs = compute_X_S(x, s);
    for (int d : {1, 2, 3}) {
      auto eq = build_extended(ar.q, d, false);
      auto k = kernel(phi(h[0], eq));
      for (size_t v = 0; v < k.size(); ++v) CHECK(sub_equal(QSub{k[v]}, QSub{xs[eq.base_vertex(v)]}));
    }
  }
}
