#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qflag/matrix.hpp"
#include "qflag/quiver.hpp"

namespace qflag {

using QuiverPtr = std::shared_ptr<const Quiver>;

// Arrow matrices have rows = dim at target, cols = dim at source.
template <class K>
struct Rep {
  QuiverPtr q;
  K k{};
  DimVec dims;
  std::vector<Matrix<K>> maps;

  size_t dim(size_t v) const { return (size_t)dims[v]; }
  const Matrix<K>& map(size_t a) const { return maps[a]; }
  long total_dim() const { return total(dims); }
};

using QRep = Rep<Rationals>;
using FRep = Rep<PrimeField>;

// Per-vertex linear maps; comp[v] has rows = dim target_v, cols = dim source_v.
template <class K>
struct Morphism {
  std::vector<Matrix<K>> comp;
};

// A subspace per vertex, given by basis columns.
template <class K>
using Subspaces = std::vector<Matrix<K>>;

template <class K>
Rep<K> zero_rep(const QuiverPtr& q, const K& k, const DimVec& dims) {
  Rep<K> r{q, k, dims, {}};
  for (const auto& a : q->arrows()) r.maps.emplace_back(k, (size_t)dims[a.tgt], (size_t)dims[a.src]);
  return r;
}

template <class K>
void check_rep(const Rep<K>& m) {
  if (m.dims.size() != m.q->num_vertices()) throw std::invalid_argument("representation: wrong number of vertices");
  if (m.maps.size() != m.q->num_arrows()) throw std::invalid_argument("representation: wrong number of arrows");
  for (auto d : m.dims)
    if (d < 0) throw std::invalid_argument("representation: negative dimension");
  for (size_t a = 0; a < m.maps.size(); ++a) {
    const auto& ar = m.q->arrow(a);
    if (m.maps[a].rows() != m.dim(ar.tgt) || m.maps[a].cols() != m.dim(ar.src))
      throw std::invalid_argument("representation: matrix for arrow '" + ar.id + "' has the wrong shape");
  }
}

template <class K>
void check_same_quiver(const Rep<K>& m, const Rep<K>& n) {
  if (m.q != n.q && !(*m.q == *n.q)) throw std::invalid_argument("representations over different quivers");
}

template <class K>
bool is_morphism(const Rep<K>& m, const Rep<K>& n, const Morphism<K>& f) {
  for (size_t a = 0; a < m.q->num_arrows(); ++a) {
    const auto& ar = m.q->arrow(a);
    if (n.maps[a] * f.comp[ar.src] != f.comp[ar.tgt] * m.maps[a]) return false;
  }
  return true;
}

// Basis of Hom(M,N), in the order of the kernel pivots.
template <class K>
std::vector<Morphism<K>> hom_space(const Rep<K>& m, const Rep<K>& n) {
  check_same_quiver(m, n);
  const K& k = m.k;
  const Quiver& q = *m.q;
  size_t nv = q.num_vertices();
  std::vector<size_t> off(nv + 1, 0);
  for (size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  size_t neq = 0;
  for (const auto& ar : q.arrows()) neq += n.dim(ar.tgt) * m.dim(ar.src);
  Matrix<K> sys(k, neq, off[nv]);
  size_t row = 0;
  // unknown phi_v(i,j) at off[v] + i*dimM_v + j
  for (size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    size_t s = ar.src, t = ar.tgt;
    const auto& mb = m.maps[a];
    const auto& nb = n.maps[a];
    for (size_t i = 0; i < n.dim(t); ++i)
      for (size_t j = 0; j < m.dim(s); ++j, ++row) {
        // (N_b phi_s)(i,j) - (phi_t M_b)(i,j)
        for (size_t l = 0; l < n.dim(s); ++l)
          if (!k.is_zero(nb(i, l))) sys(row, off[s] + l * m.dim(s) + j) = k.add(sys(row, off[s] + l * m.dim(s) + j), nb(i, l));
        for (size_t l = 0; l < m.dim(t); ++l)
          if (!k.is_zero(mb(l, j))) sys(row, off[t] + i * m.dim(t) + l) = k.sub(sys(row, off[t] + i * m.dim(t) + l), mb(l, j));
      }
  }
  auto ker = kernel_basis(sys);
  std::vector<Morphism<K>> out;
  for (size_t c = 0; c < ker.cols(); ++c) {
    Morphism<K> f;
    for (size_t v = 0; v < nv; ++v) {
      Matrix<K> x(k, n.dim(v), m.dim(v));
      for (size_t i = 0; i < n.dim(v); ++i)
        for (size_t j = 0; j < m.dim(v); ++j) x(i, j) = ker(off[v] + i * m.dim(v) + j, c);
      f.comp.push_back(std::move(x));
    }
    out.push_back(std::move(f));
  }
  return out;
}

template <class K>
size_t hom_dim(const Rep<K>& m, const Rep<K>& n) {
  return hom_space(m, n).size();
}

// Ext^1 over the path algebra via the hereditary Euler identity.
template <class K>
long ext1_dim(const Rep<K>& m, const Rep<K>& n) {
  if (!m.q->acyclic()) throw std::invalid_argument("ext1_dim: quiver has an oriented cycle");
  return (long)hom_dim(m, n) - euler_form(*m.q, m.dims, n.dims);
}

template <class K>
Morphism<K> identity_morphism(const Rep<K>& m) {
  Morphism<K> f;
  for (size_t v = 0; v < m.dims.size(); ++v) f.comp.push_back(Matrix<K>::identity(m.k, m.dim(v)));
  return f;
}

template <class K>
Morphism<K> zero_morphism(const Rep<K>& m, const Rep<K>& n) {
  Morphism<K> f;
  for (size_t v = 0; v < m.dims.size(); ++v) f.comp.emplace_back(m.k, n.dim(v), m.dim(v));
  return f;
}

// g after f.
template <class K>
Morphism<K> compose(const Morphism<K>& g, const Morphism<K>& f) {
  Morphism<K> h;
  for (size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(g.comp[v] * f.comp[v]);
  return h;
}

template <class K>
Morphism<K> add(const Morphism<K>& f, const Morphism<K>& g) {
  Morphism<K> h;
  for (size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(f.comp[v] + g.comp[v]);
  return h;
}

template <class K>
Morphism<K> scale(const Morphism<K>& f, const typename K::Elem& s) {
  Morphism<K> h;
  for (const auto& c : f.comp) h.comp.push_back(c.scaled(s));
  return h;
}

template <class K>
bool is_zero(const Morphism<K>& f) {
  for (const auto& c : f.comp)
    if (!c.is_zero()) return false;
  return true;
}

template <class K>
DimVec rank_vector(const Morphism<K>& f) {
  DimVec r;
  for (const auto& c : f.comp) r.push_back((long)rank(c));
  return r;
}

template <class K>
bool is_injective(const Morphism<K>& f) {
  for (const auto& c : f.comp)
    if (rank(c) != c.cols()) return false;
  return true;
}

template <class K>
bool is_surjective(const Morphism<K>& f) {
  for (const auto& c : f.comp)
    if (rank(c) != c.rows()) return false;
  return true;
}

template <class K>
bool is_iso(const Morphism<K>& f) {
  return is_injective(f) && is_surjective(f);
}

template <class K>
Morphism<K> inverse(const Morphism<K>& f) {
  Morphism<K> g;
  for (const auto& c : f.comp) g.comp.push_back(inverse(c));
  return g;
}

template <class K>
bool is_subrep(const Rep<K>& m, const Subspaces<K>& u) {
  for (size_t a = 0; a < m.q->num_arrows(); ++a) {
    const auto& ar = m.q->arrow(a);
    if (!subspace_contains(u[ar.tgt], m.maps[a] * u[ar.src])) return false;
  }
  return true;
}

template <class K>
Subspaces<K> canonical(const Subspaces<K>& u) {
  Subspaces<K> r;
  for (const auto& b : u) r.push_back(column_space(b));
  return r;
}

template <class K>
DimVec sub_dims(const Subspaces<K>& u) {
  DimVec d;
  for (const auto& b : u) d.push_back((long)b.cols());
  return d;
}

template <class K>
Subspaces<K> full_subspaces(const Rep<K>& m) {
  Subspaces<K> r;
  for (size_t v = 0; v < m.dims.size(); ++v) r.push_back(Matrix<K>::identity(m.k, m.dim(v)));
  return r;
}

template <class K>
Subspaces<K> zero_subspaces(const Rep<K>& m) {
  Subspaces<K> r;
  for (size_t v = 0; v < m.dims.size(); ++v) r.emplace_back(m.k, m.dim(v), 0);
  return r;
}

template <class K>
bool sub_contains(const Subspaces<K>& big, const Subspaces<K>& small) {
  for (size_t v = 0; v < big.size(); ++v)
    if (!subspace_contains(big[v], small[v])) return false;
  return true;
}

template <class K>
bool sub_equal(const Subspaces<K>& a, const Subspaces<K>& b) {
  for (size_t v = 0; v < a.size(); ++v)
    if (a[v].cols() != b[v].cols() || !subspace_contains(a[v], b[v])) return false;
  return true;
}

// The subrepresentation on basis columns u (assumed stable and of full column rank).
template <class K>
Rep<K> sub_rep(const Rep<K>& m, const Subspaces<K>& u) {
  Rep<K> r{m.q, m.k, sub_dims(u), {}};
  for (size_t a = 0; a < m.q->num_arrows(); ++a) {
    const auto& ar = m.q->arrow(a);
    auto img = m.maps[a] * u[ar.src];
    if (u[ar.tgt].cols() == 0 || img.cols() == 0)
      r.maps.emplace_back(m.k, u[ar.tgt].cols(), u[ar.src].cols());
    else
      r.maps.push_back(coordinates(u[ar.tgt], img));
  }
  return r;
}

template <class K>
struct Quotient {
  Rep<K> rep;
  Morphism<K> proj;     // M -> M/U
  Morphism<K> section;  // right inverse of proj per vertex
};

template <class K>
Quotient<K> quotient(const Rep<K>& m, const Subspaces<K>& u) {
  Quotient<K> out;
  out.rep = Rep<K>{m.q, m.k, {}, {}};
  for (size_t v = 0; v < m.dims.size(); ++v) {
    Matrix<K> p = u[v].cols() == 0 ? Matrix<K>::identity(m.k, m.dim(v)) : left_kernel(u[v]);
    out.rep.dims.push_back((long)p.rows());
    out.section.comp.push_back(p.rows() == 0 ? Matrix<K>(m.k, m.dim(v), 0) : right_inverse(p));
    out.proj.comp.push_back(std::move(p));
  }
  for (size_t a = 0; a < m.q->num_arrows(); ++a) {
    const auto& ar = m.q->arrow(a);
    out.rep.maps.push_back(out.proj.comp[ar.tgt] * m.maps[a] * out.section.comp[ar.src]);
  }
  return out;
}

template <class K>
Subspaces<K> kernel(const Morphism<K>& f) {
  Subspaces<K> r;
  for (const auto& c : f.comp) r.push_back(column_space(kernel_basis(c)));
  return r;
}

template <class K>
Subspaces<K> image(const Morphism<K>& f) {
  Subspaces<K> r;
  for (const auto& c : f.comp) r.push_back(column_space(c));
  return r;
}

// Image of a subrepresentation under a morphism.
template <class K>
Subspaces<K> push_forward(const Morphism<K>& f, const Subspaces<K>& u) {
  Subspaces<K> r;
  for (size_t v = 0; v < u.size(); ++v) r.push_back(column_space(f.comp[v] * u[v]));
  return r;
}

template <class K>
Subspaces<K> pull_back(const Morphism<K>& f, const Subspaces<K>& u) {
  Subspaces<K> r;
  for (size_t v = 0; v < u.size(); ++v) r.push_back(preimage(f.comp[v], u[v]));
  return r;
}

template <class K>
struct DirectSum {
  Rep<K> rep;
  std::vector<Morphism<K>> incl;
  std::vector<Morphism<K>> proj;
};

template <class K>
DirectSum<K> direct_sum(const QuiverPtr& q, const K& k, const std::vector<Rep<K>>& parts) {
  size_t nv = q->num_vertices();
  DimVec dims(nv, 0);
  for (const auto& p : parts) dims = vadd(dims, p.dims);
  DirectSum<K> out{zero_rep(q, k, dims), {}, {}};
  DimVec off(nv, 0);
  for (const auto& p : parts) {
    Morphism<K> in, pr;
    for (size_t v = 0; v < nv; ++v) {
      Matrix<K> i(k, dims[v], p.dims[v]);
      for (long j = 0; j < p.dims[v]; ++j) i(off[v] + j, j) = k.one();
      pr.comp.push_back(i.transpose());
      in.comp.push_back(std::move(i));
    }
    for (size_t a = 0; a < q->num_arrows(); ++a) {
      const auto& ar = q->arrow(a);
      out.rep.maps[a].set_block(off[ar.tgt], off[ar.src], p.maps[a]);
    }
    off = vadd(off, p.dims);
    out.incl.push_back(std::move(in));
    out.proj.push_back(std::move(pr));
  }
  return out;
}

// Transports M along invertible per-vertex matrices g: new maps g_t M_b g_s^{-1}.
template <class K>
Rep<K> change_basis(const Rep<K>& m, const std::vector<Matrix<K>>& g) {
  Rep<K> r = m;
  for (size_t a = 0; a < m.q->num_arrows(); ++a) {
    const auto& ar = m.q->arrow(a);
    r.maps[a] = g[ar.tgt] * m.maps[a] * inverse(g[ar.src]);
  }
  return r;
}

inline std::optional<FRep> reduce_mod(const QRep& m, const PrimeField& f) {
  FRep r{m.q, f, m.dims, {}};
  for (const auto& a : m.maps) {
    auto x = reduce_mod(a, f);
    if (!x) return std::nullopt;
    r.maps.push_back(std::move(*x));
  }
  return r;
}

inline std::optional<Morphism<PrimeField>> reduce_mod(const Morphism<Rationals>& m, const PrimeField& f) {
  Morphism<PrimeField> r;
  for (const auto& c : m.comp) {
    auto x = reduce_mod(c, f);
    if (!x) return std::nullopt;
    r.comp.push_back(std::move(*x));
  }
  return r;
}

inline std::optional<Subspaces<PrimeField>> reduce_mod(const Subspaces<Rationals>& u, const PrimeField& f) {
  Subspaces<PrimeField> r;
  for (const auto& c : u) {
    auto x = reduce_mod(c, f);
    if (!x || rank(*x) != c.cols()) return std::nullopt;
    r.push_back(std::move(*x));
  }
  return r;
}

template <class K>
long ord(const Rep<K>& m) {
  long r = 0;
  for (auto d : m.dims) r = std::max(r, d);
  return r;
}

// dim M_e at the unique branch vertex of a type E quiver.
long branch_vertex(const Quiver& q);

template <class K>
long ord_e(const Rep<K>& m) {
  return m.dims[(size_t)branch_vertex(*m.q)];
}

// Reduction mod p is accepted only when [M,M] is preserved.
bool prime_is_safe(const QRep& m, uint32_t p);
uint32_t next_prime(uint32_t p);
std::vector<uint32_t> safe_primes(const std::vector<const QRep*>& reps, size_t count, uint32_t start = 2);

QRep simple_rep(const QuiverPtr& q, size_t v);

}  // namespace qflag
