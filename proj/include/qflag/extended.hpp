#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "qflag/rep.hpp"

namespace qflag {

// A virtual arrow c together with the two identified length-two paths
// first1 then second1, and first2 then second2 (arrow indices of the extended quiver).
struct VirtualArrow {
  std::string id;
  size_t src = 0, tgt = 0;
  size_t first1 = 0, second1 = 0;
  size_t first2 = 0, second2 = 0;
};

struct ExtendedQuiver {
  QuiverPtr base;
  int d = 1;
  bool strict = false;
  QuiverPtr quiver;  // vertical and level arrows
  std::vector<VirtualArrow> virtuals;

  size_t n() const { return base->num_vertices(); }
  // Level-major indexing: (i, r) with r in 1..d.
  size_t vertex(size_t i, int r) const { return (size_t)(r - 1) * n() + i; }
  size_t base_vertex(size_t v) const { return v % n(); }
  int level(size_t v) const { return (int)(v / n()) + 1; }
  size_t vertical(size_t i, int r) const;  // arrow (i,r) -> (i,r+1)
  size_t level_arrow(size_t a, int r) const;
  std::vector<std::pair<size_t, size_t>> virtual_pairs() const;
};

ExtendedQuiver build_extended(const QuiverPtr& q, int d, bool strict);

// dimvec of Phi(M): d stacked copies.
DimVec phi_dims(const ExtendedQuiver& eq, const DimVec& m);
long euler_R(const ExtendedQuiver& eq, const DimVec& f, const DimVec& g);
// Split a level-major vector into its d level slices.
std::vector<DimVec> levels(const ExtendedQuiver& eq, const DimVec& f);
std::string format_levels(const ExtendedQuiver& eq, const DimVec& f);

template <class K>
Rep<K> phi(const Rep<K>& m, const ExtendedQuiver& eq) {
  Rep<K> t{eq.quiver, m.k, phi_dims(eq, m.dims), {}};
  const Quiver& xq = *eq.quiver;
  for (size_t a = 0; a < xq.num_arrows(); ++a) {
    const auto& ar = xq.arrow(a);
    if (ar.id.rfind("v:", 0) == 0)
      t.maps.push_back(Matrix<K>::identity(m.k, m.dim(eq.base_vertex(ar.src))));
    else
      t.maps.push_back(m.maps[m.q->arrow_index(ar.id.substr(0, ar.id.rfind('@')))]);
  }
  return t;
}

template <class K>
Morphism<K> phi(const Morphism<K>& f, const ExtendedQuiver& eq) {
  Morphism<K> g;
  for (size_t v = 0; v < eq.quiver->num_vertices(); ++v) g.comp.push_back(f.comp[eq.base_vertex(v)]);
  return g;
}

// Ids of the virtual arrows whose relation fails.
template <class K>
std::vector<std::string> validate(const Rep<K>& t, const ExtendedQuiver& eq) {
  std::vector<std::string> bad;
  for (const auto& c : eq.virtuals)
    if (t.maps[c.second1] * t.maps[c.first1] != t.maps[c.second2] * t.maps[c.first2]) bad.push_back(c.id);
  return bad;
}

// Dimensions of Ext^0, Ext^1, Ext^2 over R from the standard resolution.
template <class K>
std::array<long, 3> ext_R_all(const Rep<K>& t, const Rep<K>& u, const ExtendedQuiver& eq) {
  const K& k = t.k;
  const Quiver& xq = *eq.quiver;
  size_t nv = xq.num_vertices(), na = xq.num_arrows(), nc = eq.virtuals.size();
  // Hom_K(T_x, U_y) vectorised row-major: entry (i,j) at i*dimT_x + j.
  auto block = [&](size_t x, size_t y) { return u.dim(y) * t.dim(x); };
  std::vector<size_t> o0(nv + 1, 0), o1(na + 1, 0), o2(nc + 1, 0);
  for (size_t v = 0; v < nv; ++v) o0[v + 1] = o0[v] + block(v, v);
  for (size_t a = 0; a < na; ++a) o1[a + 1] = o1[a] + block(xq.arrow(a).src, xq.arrow(a).tgt);
  for (size_t c = 0; c < nc; ++c) o2[c + 1] = o2[c] + block(eq.virtuals[c].src, eq.virtuals[c].tgt);

  // Adds coef * (L X R) to out-block, where X ranges over the basis of Hom(T_x, U_y).
  auto add_term = [&](Matrix<K>& d, size_t row0, size_t col0, size_t out_src, size_t out_tgt, size_t x, size_t y,
                      const Matrix<K>* left, const Matrix<K>* right, bool negate) {
    size_t xr = u.dim(y), xc = t.dim(x);
    size_t orow = u.dim(out_tgt), ocol = t.dim(out_src);
    for (size_t i = 0; i < xr; ++i)
      for (size_t j = 0; j < xc; ++j) {
        size_t col = col0 + i * xc + j;
        // (L E_ij R)(p,q) = L(p,i) R(j,q)
        for (size_t p = 0; p < orow; ++p) {
          auto lv = left ? (*left)(p, i) : (p == i ? k.one() : k.zero());
          if (k.is_zero(lv)) continue;
          for (size_t qq = 0; qq < ocol; ++qq) {
            auto rv = right ? (*right)(j, qq) : (j == qq ? k.one() : k.zero());
            if (k.is_zero(rv)) continue;
            auto val = k.mul(lv, rv);
            auto& cell = d(row0 + p * ocol + qq, col);
            cell = negate ? k.sub(cell, val) : k.add(cell, val);
          }
        }
      }
  };

  Matrix<K> d0(k, o1[na], o0[nv]);
  for (size_t a = 0; a < na; ++a) {
    const auto& ar = xq.arrow(a);
    // U_b phi_s - phi_t T_b
    add_term(d0, o1[a], o0[ar.src], ar.src, ar.tgt, ar.src, ar.src, &u.maps[a], nullptr, false);
    add_term(d0, o1[a], o0[ar.tgt], ar.src, ar.tgt, ar.tgt, ar.tgt, nullptr, &t.maps[a], true);
  }
  Matrix<K> d1(k, o2[nc], o1[na]);
  for (size_t c = 0; c < nc; ++c) {
    const auto& vc = eq.virtuals[c];
    auto path = [&](size_t alpha, size_t beta, bool neg) {
      const auto& aa = xq.arrow(alpha);
      const auto& bb = xq.arrow(beta);
      // U_beta psi_alpha + psi_beta T_alpha
      add_term(d1, o2[c], o1[alpha], vc.src, vc.tgt, aa.src, aa.tgt, &u.maps[beta], nullptr, neg);
      add_term(d1, o2[c], o1[beta], vc.src, vc.tgt, bb.src, bb.tgt, nullptr, &t.maps[alpha], neg);
    };
    path(vc.first1, vc.second1, false);
    path(vc.first2, vc.second2, true);
  }
  long r0 = (long)rank(d0), r1 = (long)rank(d1);
  long c0 = (long)o0[nv], c1 = (long)o1[na], c2 = (long)o2[nc];
  return {c0 - r0, c1 - r1 - r0, c2 - r1};
}

template <class K>
long ext_R(const Rep<K>& t, const Rep<K>& u, const ExtendedQuiver& eq, int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("ext_R: degree must be 0, 1 or 2");
  return ext_R_all(t, u, eq)[(size_t)i];
}

// Random module over R with the given dimension vector. Vertical maps and the
// first level of level maps are random; later levels are solved from the relations.
template <class K>
Rep<K> random_bound_module(const ExtendedQuiver& eq, const K& k, const DimVec& dims, std::mt19937_64& rng,
                           int max_tries = 20) {
  std::uniform_int_distribution<int> ent(-2, 2);
  const Quiver& xq = *eq.quiver;
  auto rnd = [&](size_t r, size_t c) {
    Matrix<K> m(k, r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m(i, j) = k.from_int(ent(rng));
    return m;
  };
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Rep<K> t = zero_rep(eq.quiver, k, dims);
    for (size_t a = 0; a < xq.num_arrows(); ++a) {
      const auto& ar = xq.arrow(a);
      bool vertical = ar.id.rfind("v:", 0) == 0;
      int first_level = eq.strict ? 2 : 1;
      if (vertical || eq.level(ar.src) == first_level) t.maps[a] = rnd(t.dim(ar.tgt), t.dim(ar.src));
    }
    bool ok = true;
    // Virtual arrows are ordered by level, so each relation X V = B determines
    // the level arrow X one level further out.
    for (const auto& c : eq.virtuals) {
        size_t x = c.second1, vert = c.first1;
        auto b = t.maps[c.second2] * t.maps[c.first2];
        auto v = t.maps[vert];
        auto s = solve(v.transpose(), b.transpose());
        if (!s.consistent) {
          ok = false;
          break;
        }
        auto sol = s.particular;
        for (size_t j = 0; j < s.kernel.cols(); ++j) {
          auto coef = rnd(1, sol.cols());
          sol = sol + s.kernel.column(j) * coef;
        }
        t.maps[x] = sol.transpose();
    }
    if (ok && validate(t, eq).empty()) return t;
  }
  Rep<K> t = zero_rep(eq.quiver, k, dims);
  for (size_t a = 0; a < xq.num_arrows(); ++a)
    if (xq.arrow(a).id.rfind("v:", 0) == 0) t.maps[a] = rnd(t.dim(xq.arrow(a).tgt), t.dim(xq.arrow(a).src));
  return t;
}

}  // namespace qflag
