#include "qflag/artheory.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qflag {

namespace {

const Rationals QQ{};

// Integral primitive rows spanning the same row space.
QMatrix integral_rows(const QMatrix& m) {
  QMatrix r = m;
  for (size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1, g = 0;
    for (size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (size_t j = 0; j < m.cols(); ++j) {
      mpq_class x = m(i, j) * l;
      r(i, j) = x;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g != 0 && g != 1)
      for (size_t j = 0; j < m.cols(); ++j) r(i, j) = r(i, j) / mpq_class(g);
  }
  return r;
}

std::vector<mpq_class> flatten(const QMorphism& f) {
  std::vector<mpq_class> v;
  for (const auto& c : f.comp) v.insert(v.end(), c.data().begin(), c.data().end());
  return v;
}

// Columns of the given vectors.
QMatrix columns_of(const std::vector<std::vector<mpq_class>>& vs, size_t len) {
  QMatrix m(QQ, len, vs.size());
  for (size_t j = 0; j < vs.size(); ++j)
    for (size_t i = 0; i < len; ++i) m(i, j) = vs[j][i];
  return m;
}

QMatrix path_matrix(const QRep& m, const Path& p, size_t start) {
  QMatrix x = QMatrix::identity(QQ, m.dim(start));
  for (auto b : p) x = m.maps[b] * x;
  return x;
}

struct Cover {
  std::vector<size_t> tops;  // vertex of each summand
  QRep p;
  QMorphism map;  // p -> m
  std::vector<QMorphism> incl;
};

Cover projective_cover(const QRep& m) {
  const Quiver& q = *m.q;
  auto paths = all_paths(q);
  Cover c;
  std::vector<std::pair<size_t, QMatrix>> gens;
  for (size_t v = 0; v < q.num_vertices(); ++v) {
    std::vector<QMatrix> parts;
    for (auto a : q.in_arrows(v)) parts.push_back(m.maps[a]);
    QMatrix span = parts.empty() ? QMatrix(QQ, m.dim(v), 0) : column_space(QMatrix::hstack(QQ, m.dim(v), parts));
    for (size_t j = 0; j < m.dim(v); ++j) {
      QMatrix e(QQ, m.dim(v), 1);
      e(j, 0) = 1;
      if (subspace_contains(span, e)) continue;
      span = QMatrix::hstack(QQ, m.dim(v), {span, e});
      gens.push_back({v, e});
    }
  }
  std::vector<QRep> parts;
  for (auto& [v, e] : gens) {
    c.tops.push_back(v);
    parts.push_back(projective(m.q, v));
  }
  auto ds = direct_sum(m.q, QQ, parts);
  c.p = ds.rep;
  c.incl = ds.incl;
  c.map = zero_morphism(c.p, m);
  for (size_t s = 0; s < gens.size(); ++s) {
    size_t v = gens[s].first;
    for (size_t k = 0; k < q.num_vertices(); ++k) {
      const auto& ps = paths[v][k];
      for (size_t idx = 0; idx < ps.size(); ++idx) {
        QMatrix img = path_matrix(m, ps[idx], v) * gens[s].second;
        QMatrix unit(QQ, parts[s].dim(k), 1);
        unit(idx, 0) = 1;
        QMatrix col = ds.incl[s].comp[k] * unit;
        // column of the basis vector col in c.p
        size_t pos = 0;
        while (col(pos, 0) == 0) ++pos;
        for (size_t r = 0; r < m.dim(k); ++r) c.map.comp[k](r, pos) = img(r, 0);
      }
    }
  }
  return c;
}

// Nakayama image of a morphism between projectives given by the path q: j -> i,
// as a morphism I(i) -> I(j).
QMorphism nakayama_path(const Quiver& q, const std::vector<std::vector<std::vector<Path>>>& paths, size_t i,
                        size_t j, const Path& p) {
  QMorphism f;
  for (size_t k = 0; k < q.num_vertices(); ++k) {
    const auto& src = paths[k][i];
    const auto& dst = paths[k][j];
    QMatrix x(QQ, dst.size(), src.size());
    for (size_t c = 0; c < src.size(); ++c)
      for (size_t r = 0; r < dst.size(); ++r) {
        Path cat = dst[r];
        cat.insert(cat.end(), p.begin(), p.end());
        if (cat == src[c]) x(r, c) = 1;
      }
    f.comp.push_back(std::move(x));
  }
  return f;
}

}  // namespace

std::vector<std::vector<std::vector<Path>>> all_paths(const Quiver& q) {
  if (!q.acyclic()) throw std::invalid_argument("path enumeration needs an acyclic quiver");
  size_t n = q.num_vertices();
  std::vector<std::vector<std::vector<Path>>> out(n, std::vector<std::vector<Path>>(n));
  for (size_t u = 0; u < n; ++u) {
    std::function<void(size_t, Path&)> dfs = [&](size_t v, Path& p) {
      out[u][v].push_back(p);
      for (auto a : q.out_arrows(v)) {
        p.push_back(a);
        dfs(q.arrow(a).tgt, p);
        p.pop_back();
      }
    };
    Path p;
    dfs(u, p);
  }
  return out;
}

QRep projective(const QuiverPtr& q, size_t i) {
  auto paths = all_paths(*q);
  size_t n = q->num_vertices();
  DimVec d(n);
  for (size_t k = 0; k < n; ++k) d[k] = (long)paths[i][k].size();
  QRep r = zero_rep(q, QQ, d);
  for (size_t a = 0; a < q->num_arrows(); ++a) {
    const auto& ar = q->arrow(a);
    const auto& src = paths[i][ar.src];
    const auto& dst = paths[i][ar.tgt];
    for (size_t c = 0; c < src.size(); ++c) {
      Path ext = src[c];
      ext.push_back(a);
      auto it = std::find(dst.begin(), dst.end(), ext);
      r.maps[a](it - dst.begin(), c) = 1;
    }
  }
  return r;
}

QRep injective(const QuiverPtr& q, size_t i) {
  auto paths = all_paths(*q);
  size_t n = q->num_vertices();
  DimVec d(n);
  for (size_t k = 0; k < n; ++k) d[k] = (long)paths[k][i].size();
  QRep r = zero_rep(q, QQ, d);
  for (size_t a = 0; a < q->num_arrows(); ++a) {
    const auto& ar = q->arrow(a);
    const auto& src = paths[ar.src][i];
    const auto& dst = paths[ar.tgt][i];
    for (size_t c = 0; c < src.size(); ++c) {
      if (src[c].empty() || src[c][0] != a) continue;
      Path rest(src[c].begin() + 1, src[c].end());
      auto it = std::find(dst.begin(), dst.end(), rest);
      r.maps[a](it - dst.begin(), c) = 1;
    }
  }
  return r;
}

QRep dual(const QRep& m, const QuiverPtr& opposite) {
  QRep r{opposite, QQ, m.dims, {}};
  for (const auto& x : m.maps) r.maps.push_back(x.transpose());
  return r;
}

namespace {

QRep nakayama_translate(const QRep& m) {
  const Quiver& q = *m.q;
  auto paths = all_paths(q);
  if (m.total_dim() == 0) return m;
  Cover c0 = projective_cover(m);
  QSub ker = kernel(c0.map);
  QRep krep = sub_rep(c0.p, ker);
  Cover c1 = projective_cover(krep);
  QMorphism f;  // P1 -> P0
  for (size_t v = 0; v < q.num_vertices(); ++v) f.comp.push_back(ker[v] * c1.map.comp[v]);
  std::vector<QRep> i1, i0;
  for (auto v : c1.tops) i1.push_back(injective(m.q, v));
  for (auto v : c0.tops) i0.push_back(injective(m.q, v));
  auto n1 = direct_sum(m.q, QQ, i1);
  auto n0 = direct_sum(m.q, QQ, i0);
  QMorphism nf = zero_morphism(n1.rep, n0.rep);
  auto p0 = direct_sum(m.q, QQ, [&] {
    std::vector<QRep> ps;
    for (auto v : c0.tops) ps.push_back(projective(m.q, v));
    return ps;
  }());
  for (size_t s = 0; s < c1.tops.size(); ++s) {
    size_t i = c1.tops[s];
    // image of the trivial path at i of summand s
    QMatrix unit(QQ, projective(m.q, i).dim(i), 1);
    unit(0, 0) = 1;
    QMatrix img = f.comp[i] * (c1.incl[s].comp[i] * unit);
    for (size_t t = 0; t < c0.tops.size(); ++t) {
      size_t j = c0.tops[t];
      QMatrix coef = p0.proj[t].comp[i] * img;  // coordinates over paths j -> i
      for (size_t qi = 0; qi < paths[j][i].size(); ++qi) {
        if (coef(qi, 0) == 0) continue;
        QMorphism nu = nakayama_path(q, paths, i, j, paths[j][i][qi]);
        for (size_t v = 0; v < q.num_vertices(); ++v)
          nf.comp[v] = nf.comp[v] + n0.incl[t].comp[v] * nu.comp[v].scaled(coef(qi, 0)) * n1.proj[s].comp[v];
      }
    }
  }
  return sub_rep(n1.rep, kernel(nf));
}

}  // namespace

QRep tau(const QRep& m) {
  QRep t = nakayama_translate(m);
  if (m.total_dim() > 0 && t.total_dim() == 0) throw std::invalid_argument("tau: the representation is projective");
  return t;
}

QRep tau_inv(const QRep& m) {
  auto op = std::make_shared<const Quiver>(m.q->opposite());
  QRep t = nakayama_translate(dual(m, op));
  if (m.total_dim() > 0 && t.total_dim() == 0) throw std::invalid_argument("tau_inv: the representation is injective");
  return dual(t, m.q);
}

size_t ARQuiver::node(const DimVec& root) const {
  auto it = index.find(root);
  if (it == index.end()) throw std::invalid_argument("no indecomposable with dimension vector " + dimvec_str(root));
  return it->second;
}

std::optional<size_t> ARQuiver::find(const DimVec& root) const {
  auto it = index.find(root);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::string ARQuiver::label(size_t i) const { return label(nodes[i].root); }
std::string ARQuiver::label(const DimVec& v) const { return format_stacked(shape, v); }

ARQuiver knit(const QuiverPtr& q) {
  ARQuiver ar;
  ar.q = q;
  ar.shape = classify(*q);
  if (!ar.shape.dynkin()) throw std::invalid_argument("knit: quiver is not of Dynkin type");
  auto paths = all_paths(*q);
  size_t n = q->num_vertices();
  auto add_node = [&](QRep rep) {
    ARNode nd;
    nd.root = rep.dims;
    nd.rep = std::move(rep);
    if (ar.index.count(nd.root)) throw std::logic_error("knit: repeated dimension vector " + dimvec_str(nd.root));
    ar.index[nd.root] = ar.nodes.size();
    ar.nodes.push_back(std::move(nd));
    ar.in.emplace_back();
    ar.out.emplace_back();
    return ar.nodes.size() - 1;
  };
  auto add_arrow = [&](size_t from, size_t to, QMorphism m) {
    ar.arrows.push_back({from, to, std::move(m)});
    ar.out[from].push_back(ar.arrows.size() - 1);
    ar.in[to].push_back(ar.arrows.size() - 1);
  };
  for (size_t i = 0; i < n; ++i) {
    size_t id = add_node(projective(q, i));
    ar.nodes[id].projective = true;
  }
  for (size_t a = 0; a < q->num_arrows(); ++a) {
    const auto& arw = q->arrow(a);
    size_t i = arw.src, j = arw.tgt;
    // P(j) -> P(i): p |-> a then p
    const QRep& pj = ar.nodes[j].rep;
    const QRep& pi = ar.nodes[i].rep;
    QMorphism m = zero_morphism(pj, pi);
    for (size_t k = 0; k < n; ++k)
      for (size_t c = 0; c < paths[j][k].size(); ++c) {
        Path ext{a};
        ext.insert(ext.end(), paths[j][k][c].begin(), paths[j][k][c].end());
        auto it = std::find(paths[i][k].begin(), paths[i][k].end(), ext);
        m.comp[k](it - paths[i][k].begin(), c) = 1;
      }
    add_arrow(j, i, std::move(m));
  }
  std::vector<bool> done;
  for (;;) {
    done.resize(ar.nodes.size(), false);
    long pick = -1;
    for (size_t z = 0; z < ar.nodes.size() && pick < 0; ++z) {
      if (done[z]) continue;
      bool ready = true;
      for (auto a : ar.in[z])
        if (!done[ar.arrows[a].from]) ready = false;
      if (ready) pick = (long)z;
    }
    if (pick < 0) break;
    size_t z = (size_t)pick;
    done[z] = true;
    std::vector<size_t> succ = ar.out[z];
    const QRep& zr = ar.nodes[z].rep;
    if (succ.empty()) {
      ar.nodes[z].injective = true;
      continue;
    }
    std::vector<QRep> parts;
    for (auto a : succ) parts.push_back(ar.nodes[ar.arrows[a].to].rep);
    auto e = direct_sum(q, QQ, parts);
    QMorphism g = zero_morphism(zr, e.rep);
    for (size_t s = 0; s < succ.size(); ++s) g = add(g, compose(e.incl[s], ar.arrows[succ[s]].map));
    if (!is_injective(g)) {
      ar.nodes[z].injective = true;
      continue;
    }
    QMorphism proj;
    QRep coker{q, QQ, {}, {}};
    std::vector<QMatrix> sections;
    for (size_t v = 0; v < n; ++v) {
      QMatrix l = integral_rows(left_kernel(g.comp[v]));
      coker.dims.push_back((long)l.rows());
      sections.push_back(l.rows() == 0 ? QMatrix(QQ, e.rep.dim(v), 0) : right_inverse(l));
      proj.comp.push_back(std::move(l));
    }
    for (size_t a = 0; a < q->num_arrows(); ++a) {
      const auto& arw = q->arrow(a);
      coker.maps.push_back(proj.comp[arw.tgt] * e.rep.maps[a] * sections[arw.src]);
    }
    if (total(coker.dims) == 0) {
      ar.nodes[z].injective = true;
      continue;
    }
    size_t c = add_node(std::move(coker));
    ar.nodes[z].tau_inv = (long)c;
    ar.nodes[c].tau = (long)z;
    for (size_t s = 0; s < succ.size(); ++s) add_arrow(ar.arrows[succ[s]].to, c, compose(proj, e.incl[s]));
  }
  if (ar.nodes.size() != positive_roots(*q).size())
    throw std::logic_error("knit: node count differs from the number of positive roots");
  return ar;
}

const ARQuiver& ar_quiver(const QuiverPtr& q) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<ARQuiver>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& a : cache)
    if (a->q == q || *a->q == *q) return *a;
  cache.push_back(std::make_unique<ARQuiver>(knit(q)));
  return *cache.back();
}

QRep build_indecomposable(const QuiverPtr& q, const DimVec& root) {
  const auto& ar = ar_quiver(q);
  auto i = ar.find(root);
  if (!i) throw std::invalid_argument(dimvec_str(root) + " is not a positive root");
  QRep r = ar.nodes[*i].rep;
  r.q = q;
  return r;
}

bool is_exact(const QRep& a, const QRep& b, const QRep& c, const QMorphism& f, const QMorphism& g) {
  if (!is_morphism(a, b, f) || !is_morphism(b, c, g)) return false;
  if (!is_injective(f) || !is_surjective(g)) return false;
  for (size_t v = 0; v < a.dims.size(); ++v) {
    if (!(g.comp[v] * f.comp[v]).is_zero()) return false;
    if (a.dims[v] + c.dims[v] != b.dims[v]) return false;
  }
  return true;
}

ARSequence ar_sequence(const ARQuiver& ar, size_t x) {
  const auto& nx = ar.nodes[x];
  if (nx.projective) throw std::invalid_argument("ar_sequence: " + ar.label(x) + " is projective");
  ARSequence s;
  s.right = x;
  s.left = (size_t)nx.tau;
  std::vector<QRep> parts;
  std::vector<size_t> into;
  for (auto a : ar.in[x]) {
    s.middle.push_back(ar.arrows[a].from);
    parts.push_back(ar.nodes[ar.arrows[a].from].rep);
    into.push_back(a);
  }
  auto e = direct_sum(ar.q, QQ, parts);
  s.middle_rep = e.rep;
  s.f = zero_morphism(ar.nodes[s.left].rep, e.rep);
  s.g = zero_morphism(e.rep, nx.rep);
  for (size_t k = 0; k < s.middle.size(); ++k) {
    size_t mid = s.middle[k];
    const QMorphism* from_left = nullptr;
    for (auto a : ar.out[s.left])
      if (ar.arrows[a].to == mid) from_left = &ar.arrows[a].map;
    if (!from_left) throw std::logic_error("ar_sequence: missing mesh arrow");
    s.f = add(s.f, compose(e.incl[k], *from_left));
    s.g = add(s.g, compose(ar.arrows[into[k]].map, e.proj[k]));
  }
  return s;
}

std::optional<QMorphism> find_iso(const QRep& a, const QRep& b) {
  if (a.dims != b.dims) return std::nullopt;
  auto h = hom_space(a, b);
  for (const auto& f : h)
    if (is_iso(f)) return f;
  if (h.size() > 1) {
    QMorphism s = h[0];
    for (size_t i = 1; i < h.size(); ++i) s = add(s, scale(h[i], mpq_class((long)(i + 1))));
    if (is_iso(s)) return s;
  }
  return std::nullopt;
}

long irreducible_dim(const ARQuiver& ar, const QRep& m, const QRep& n) {
  if (find_iso(m, n)) return 0;
  auto hom = hom_space(m, n);
  if (hom.empty()) return 0;
  size_t len = flatten(hom[0]).size();
  std::vector<std::vector<mpq_class>> comps;
  for (const auto& z : ar.nodes) {
    if (find_iso(m, z.rep) || find_iso(z.rep, n)) continue;
    auto f = hom_space(m, z.rep);
    if (f.empty()) continue;
    auto g = hom_space(z.rep, n);
    for (const auto& gi : g)
      for (const auto& fi : f) comps.push_back(flatten(compose(gi, fi)));
  }
  long r2 = comps.empty() ? 0 : (long)rank(columns_of(comps, len));
  return (long)hom.size() - r2;
}

std::vector<SectionalPath> sectional_paths_into(const ARQuiver& ar, size_t y) {
  std::vector<SectionalPath> out;
  // rev holds X_t, X_{t-1}, ...; maps[i] is the morphism rev[i+1] -> rev[i] composed down to Y.
  std::function<void(std::vector<size_t>&, const QMorphism&)> grow = [&](std::vector<size_t>& rev,
                                                                         const QMorphism& to_y) {
    size_t head = rev.back();
    for (auto a : ar.in[head]) {
      size_t p = ar.arrows[a].from;
      if (rev.size() >= 2 && ar.nodes[rev[rev.size() - 2]].tau == (long)p) continue;
      QMorphism comp = compose(to_y, ar.arrows[a].map);
      rev.push_back(p);
      SectionalPath sp;
      sp.nodes.assign(rev.rbegin(), rev.rend());
      sp.composite = comp;
      out.push_back(sp);
      grow(rev, comp);
      rev.pop_back();
    }
  };
  std::vector<size_t> rev{y};
  grow(rev, identity_morphism(ar.nodes[y].rep));
  return out;
}

std::vector<SectionalMono> minimal_sectional_monos(const ARQuiver& ar, size_t y) {
  std::vector<SectionalMono> out;
  for (const auto& sp : sectional_paths_into(ar, y)) {
    if (!is_injective(sp.composite)) continue;
    // partial composites X_i -> Y for i >= 1
    bool minimal = true;
    QMorphism to_y = identity_morphism(ar.nodes[y].rep);
    for (size_t i = sp.nodes.size() - 1; i >= 2 && minimal; --i) {
      size_t from = sp.nodes[i - 1], to = sp.nodes[i];
      const QMorphism* m = nullptr;
      for (auto a : ar.out[from])
        if (ar.arrows[a].to == to) m = &ar.arrows[a].map;
      to_y = compose(to_y, *m);
      if (!is_surjective(to_y)) minimal = false;
    }
    if (!minimal) continue;
    out.push_back({sp, sp.nodes.front(), y});
  }
  std::stable_sort(out.begin(), out.end(), [&](const SectionalMono& a, const SectionalMono& b) {
    const auto& ra = ar.nodes[a.x].root;
    const auto& rb = ar.nodes[b.x].root;
    if (total(ra) != total(rb)) return total(ra) > total(rb);
    return ra > rb;
  });
  return out;
}

std::optional<SectionalMono> find_minimal_sectional_mono(const ARQuiver& ar, size_t y) {
  auto all = minimal_sectional_monos(ar, y);
  if (all.empty()) return std::nullopt;
  return all.front();
}

QSub compute_X_S(const QRep& x, const QRep& s) {
  long e = ext1_dim(s, x);
  if (e != 1) throw std::invalid_argument("X_S is defined only when [S,X]^1 = 1 (found " + std::to_string(e) + ")");
  const auto& ar = ar_quiver(x.q);
  auto xi = ar.find(x.dims);
  if (xi && ar.nodes[*xi].injective)
    throw std::logic_error("X_S: X is injective, so the kernel description does not apply");
  QRep ts = tau(s);
  auto h = hom_space(x, ts);
  if (h.size() != 1) throw std::logic_error("X_S: expected a one-dimensional Hom(X, tau S)");
  return kernel(h[0]);
}

QSub compute_S_X(const QRep& x, const QRep& s) {
  long e = ext1_dim(s, x);
  if (e != 1) throw std::invalid_argument("S^X is defined only when [S,X]^1 = 1 (found " + std::to_string(e) + ")");
  QRep ti = tau_inv(x);
  auto h = hom_space(ti, s);
  if (h.size() != 1) throw std::logic_error("S^X: expected a one-dimensional Hom(tau^-1 X, S)");
  return image(h[0]);
}

HomExtTable hom_ext_table(const QRep& x, const QRep& y, const QRep& s) {
  const QRep* r[3] = {&x, &y, &s};
  HomExtTable t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      t.hom[i][j] = (long)hom_dim(*r[i], *r[j]);
      t.ext[i][j] = ext1_dim(*r[i], *r[j]);
    }
  return t;
}

const HomExtTable& expected_mono_table() {
  static const HomExtTable t{{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}};
  return t;
}

bool operator==(const HomExtTable& a, const HomExtTable& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a.hom[i][j] != b.hom[i][j] || a.ext[i][j] != b.ext[i][j]) return false;
  return true;
}

std::map<DimVec, long> decompose(const QRep& m) {
  const auto& ar = ar_quiver(m.q);
  static std::mutex mu;
  static std::map<const ARQuiver*, QMatrix> homs;
  size_t n = ar.nodes.size();
  QMatrix h;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = homs.find(&ar);
    if (it == homs.end()) {
      QMatrix hm(QQ, n, n);
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) hm(a, b) = (long)hom_dim(ar.nodes[a].rep, ar.nodes[b].rep);
      it = homs.emplace(&ar, hm).first;
    }
    h = it->second;
  }
  QMatrix rhs(QQ, n, 1);
  for (size_t a = 0; a < n; ++a) rhs(a, 0) = (long)hom_dim(ar.nodes[a].rep, m);
  auto s = solve(h, rhs);
  if (!s.consistent || s.kernel.cols() != 0) throw std::logic_error("decompose: singular Hom-count system");
  std::map<DimVec, long> out;
  for (size_t b = 0; b < n; ++b) {
    const auto& x = s.particular(b, 0);
    if (x.get_den() != 1 || x < 0) throw std::invalid_argument("decompose: inconsistent Hom counts");
    if (x != 0) out[ar.nodes[b].root] = x.get_num().get_si();
  }
  return out;
}

std::string to_dot(const ARQuiver& ar) {
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n";
  for (size_t i = 0; i < ar.nodes.size(); ++i) os << "  n" << i << " [label=\"" << ar.label(i) << "\"];\n";
  for (const auto& a : ar.arrows) os << "  n" << a.from << " -> n" << a.to << ";\n";
  for (size_t i = 0; i < ar.nodes.size(); ++i)
    if (ar.nodes[i].tau >= 0) os << "  n" << i << " -> n" << ar.nodes[i].tau << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qflag
