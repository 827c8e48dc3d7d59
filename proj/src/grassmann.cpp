#include "qflag/grassmann.hpp"

#include <algorithm>
#include <cstdlib>

namespace qflag {

uint64_t default_max_nodes() {
  if (const char* e = std::getenv("QP_MAX_NODES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(e, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50'000'000ULL;
}

mpz_class gaussian_binomial(long n, long k, uint32_t p) {
  if (k < 0 || k > n) return 0;
  mpz_class num = 1, den = 1, q = p;
  for (long i = 0; i < k; ++i) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), (unsigned long)(n - i));
    mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), (unsigned long)(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

void for_each_subspace(const PrimeField& k, size_t n, size_t dim, const std::function<void(const FMatrix&)>& visit) {
  if (dim > n) return;
  std::vector<size_t> piv(dim);
  for (size_t i = 0; i < dim; ++i) piv[i] = i;
  for (;;) {
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::pair<size_t, size_t>> free;  // (row of basis, column j)
    for (size_t j = 0; j < dim; ++j)
      for (size_t r = piv[j] + 1; r < n; ++r)
        if (!is_piv[r]) free.push_back({r, j});
    FMatrix m(k, n, dim);
    for (size_t j = 0; j < dim; ++j) m(piv[j], j) = 1;
    std::vector<uint32_t> val(free.size(), 0);
    for (;;) {
      visit(m);
      size_t i = 0;
      while (i < val.size()) {
        if (++val[i] < k.p) {
          m(free[i].first, free[i].second) = val[i];
          break;
        }
        val[i] = 0;
        m(free[i].first, free[i].second) = 0;
        ++i;
      }
      if (i == val.size()) break;
    }
    // next pivot combination
    long i = (long)dim - 1;
    while (i >= 0 && piv[(size_t)i] == n - dim + (size_t)i) --i;
    if (i < 0) break;
    ++piv[(size_t)i];
    for (size_t j = (size_t)i + 1; j < dim; ++j) piv[j] = piv[j - 1] + 1;
  }
}

namespace {

struct Window {
  FMatrix lo, up;
  long r = 0, c = 0;
};

class Search {
 public:
  Search(const FRep& t, const DimVec& f, const EnumOptions& opt) : t_(t), f_(f), opt_(opt), k_(t.k) {
    if (f.size() != t.dims.size()) throw std::invalid_argument("dimension vector has the wrong length");
    for (size_t v = 0; v < f.size(); ++v)
      if (f[v] < 0 || f[v] > t.dims[v])
        throw std::invalid_argument("dimension vector " + dimvec_str(f) + " out of range for " + dimvec_str(t.dims));
    chosen_.resize(f.size());
    used_ = opt.used ? opt.used : &local_;
  }

  mpz_class count() {
    counting_ = true;
    return run();
  }

  void enumerate(const std::function<void(const FSub&)>& visit) {
    counting_ = false;
    visit_ = &visit;
    run();
  }

 private:
  bool window(size_t v, Window& w) {
    size_t n = (size_t)t_.dims[v];
    w.lo = opt_.lower ? (*opt_.lower)[v] : FMatrix(k_, n, 0);
    w.up = opt_.upper ? (*opt_.upper)[v] : FMatrix::identity(k_, n);
    const Quiver& q = *t_.q;
    for (auto a : q.in_arrows(v)) {
      size_t u = q.arrow(a).src;
      if (chosen_[u]) w.lo = subspace_sum(w.lo, t_.maps[a] * *chosen_[u]);
    }
    for (auto a : q.out_arrows(v)) {
      size_t x = q.arrow(a).tgt;
      if (chosen_[x]) w.up = subspace_intersection(w.up, preimage(t_.maps[a], *chosen_[x]));
    }
    w.lo = column_space(w.lo);
    w.up = column_space(w.up);
    w.r = (long)w.lo.cols();
    w.c = (long)w.up.cols();
    if (w.r > f_[v] || w.c < f_[v]) return false;
    return subspace_contains(w.up, w.lo);
  }

  mpz_class run() {
    if (++*used_ > opt_.max_nodes) throw BudgetExceeded(*used_);
    size_t nv = f_.size();
    std::vector<size_t> open;
    for (size_t v = 0; v < nv; ++v)
      if (!chosen_[v]) open.push_back(v);
    if (open.empty()) {
      if (!counting_) {
        FSub u;
        for (auto& c : chosen_) u.push_back(*c);
        (*visit_)(u);
      }
      return 1;
    }
    std::vector<Window> win(nv);
    std::vector<mpz_class> cand(nv);
    for (auto v : open) {
      if (!window(v, win[v])) return 0;
      cand[v] = gaussian_binomial(win[v].c - win[v].r, f_[v] - win[v].r, k_.p);
    }
    if (counting_) {
      bool independent = true;
      const Quiver& q = *t_.q;
      for (size_t a = 0; a < q.num_arrows() && independent; ++a)
        if (!chosen_[q.arrow(a).src] && !chosen_[q.arrow(a).tgt]) independent = false;
      if (independent) {
        mpz_class prod = 1;
        for (auto v : open) prod *= cand[v];
        return prod;
      }
    }
    size_t best = open[0];
    for (auto v : open)
      if (cand[v] < cand[best]) best = v;
    const Window& w = win[best];
    size_t n = (size_t)t_.dims[best];
    std::vector<FMatrix> ext_cols;
    FMatrix span = w.lo;
    for (size_t j = 0; j < w.up.cols(); ++j) {
      FMatrix col = w.up.column(j);
      if (subspace_contains(span, col)) continue;
      span = FMatrix::hstack(k_, n, {span, col});
      ext_cols.push_back(col);
    }
    FMatrix ext = FMatrix::hstack(k_, n, ext_cols);
    mpz_class total = 0;
    for_each_subspace(k_, ext_cols.size(), (size_t)(f_[best] - w.r), [&](const FMatrix& sub) {
      chosen_[best] = FMatrix::hstack(k_, n, {w.lo, ext * sub});
      total += run();
    });
    chosen_[best].reset();
    return total;
  }

  const FRep& t_;
  const DimVec& f_;
  const EnumOptions& opt_;
  PrimeField k_;
  std::vector<std::optional<FMatrix>> chosen_;
  bool counting_ = true;
  const std::function<void(const FSub&)>* visit_ = nullptr;
  uint64_t local_ = 0;
  uint64_t* used_ = nullptr;
};

}  // namespace

void enumerate_submodules(const FRep& t, const DimVec& f, const std::function<void(const FSub&)>& visit,
                          const EnumOptions& opt) {
  Search(t, f, opt).enumerate(visit);
}

mpz_class count_submodules(const FRep& t, const DimVec& f, const EnumOptions& opt) {
  return Search(t, f, opt).count();
}

mpz_class count_flags_directly(const FRep& m, int d, bool strict, const DimVec& f, const EnumOptions& opt) {
  if (d < 1) throw std::invalid_argument("flag length must be at least 1");
  if (strict && d < 2) throw std::invalid_argument("strict flags need d >= 2");
  size_t n = m.dims.size();
  if (f.size() != n * (size_t)d) throw std::invalid_argument("flag dimension vector has the wrong length");
  const Quiver& q = *m.q;
  uint64_t local = 0;
  EnumOptions base = opt;
  if (!base.used) base.used = &local;
  auto slice = [&](int k) { return DimVec(f.begin() + (long)((k - 1) * n), f.begin() + (long)(k * n)); };
  for (int k = 1; k <= d; ++k)
    for (size_t v = 0; v < n; ++v) {
      long x = f[(size_t)(k - 1) * n + v];
      if (x < 0 || x > m.dims[v]) throw std::invalid_argument("flag dimension vector out of range");
      if (k < d && x > f[(size_t)k * n + v]) return 0;
    }
  std::function<mpz_class(int, const FSub*)> level = [&](int k, const FSub* outer) -> mpz_class {
    EnumOptions o = base;
    FSub lower;
    if (outer) {
      o.upper = outer;
      if (strict) {
        for (size_t v = 0; v < n; ++v) {
          FMatrix s(m.k, (size_t)m.dims[v], 0);
          for (auto a : q.in_arrows(v)) s = subspace_sum(s, m.maps[a] * (*outer)[q.arrow(a).src]);
          lower.push_back(s);
        }
        o.lower = &lower;
      }
    }
    DimVec fk = slice(k);
    if (k == 1) return count_submodules(m, fk, o);
    mpz_class total = 0;
    enumerate_submodules(m, fk, [&](const FSub& u) { total += level(k - 1, &u); }, o);
    return total;
  };
  return level(d, nullptr);
}

namespace {

DimVec intersection_dims(const FSub& u, const FSub& x) {
  DimVec r(u.size());
  for (size_t v = 0; v < u.size(); ++v)
    r[v] = (long)(rank(u[v]) + rank(x[v])) - (long)rank(subspace_sum(u[v], x[v]));
  return r;
}

}  // namespace

mpz_class count_strata(const FRep& y, const FSub& x, const DimVec& f, const DimVec& g, const EnumOptions& opt) {
  if (f.size() != g.size() || f.size() != y.dims.size()) throw std::invalid_argument("strata: length mismatch");
  DimVec h = vadd(f, g);
  mpz_class n = 0;
  enumerate_submodules(y, h, [&](const FSub& u) {
    if (intersection_dims(u, x) == f) ++n;
  }, opt);
  return n;
}

std::map<std::pair<DimVec, DimVec>, mpz_class> strata_counts(const FRep& y, const FSub& x, const DimVec& h,
                                                              const EnumOptions& opt) {
  std::map<std::pair<DimVec, DimVec>, mpz_class> out;
  enumerate_submodules(y, h, [&](const FSub& u) {
    DimVec f = intersection_dims(u, x);
    out[{f, vsub(h, f)}] += 1;
  }, opt);
  return out;
}

std::vector<DimVec> all_dimvecs(const DimVec& bound) {
  std::vector<DimVec> out;
  DimVec cur(bound.size(), 0);
  for (auto b : bound)
    if (b < 0) return out;
  for (;;) {
    out.push_back(cur);
    size_t i = 0;
    while (i < cur.size() && cur[i] == bound[i]) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return out;
}

mpz_class Polynomial::eval(long q) const {
  mpq_class s = 0, x = 1;
  for (const auto& c : coeffs) {
    s += c * x;
    x *= q;
  }
  if (s.get_den() != 1) throw std::logic_error("polynomial value is not an integer");
  return s.get_num();
}

Polynomial interpolate_polynomial(const std::vector<std::pair<long, mpz_class>>& points, long degree) {
  if (degree < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if ((long)points.size() < degree + 1)
    throw std::invalid_argument("need " + std::to_string(degree + 1) + " sample points, got " +
                                std::to_string(points.size()));
  size_t m = (size_t)degree + 1;
  std::vector<mpq_class> xs(m), dd(m);
  for (size_t i = 0; i < m; ++i) {
    xs[i] = points[i].first;
    dd[i] = mpq_class(points[i].second);
  }
  for (size_t j = 1; j < m; ++j)
    for (size_t i = m - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Newton to monomial basis
  std::vector<mpq_class> c(m, 0);
  for (size_t i = m; i-- > 0;) {
    // c = c * (x - xs[i]) + dd[i]
    std::vector<mpq_class> next(m, 0);
    for (size_t j = 0; j < m; ++j) {
      if (c[j] == 0) continue;
      if (j + 1 < m) next[j + 1] += c[j];
      next[j] -= c[j] * xs[i];
    }
    next[0] += dd[i];
    c = next;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  Polynomial p;
  p.coeffs = c;
  p.integral = true;
  p.nonnegative = true;
  for (const auto& x : c) {
    if (x.get_den() != 1) p.integral = false;
    if (x < 0) p.nonnegative = false;
  }
  for (size_t i = m; i < points.size(); ++i) {
    mpq_class s = 0, x = 1;
    for (const auto& co : c) {
      s += co * x;
      x *= points[i].first;
    }
    if (s != mpq_class(points[i].second)) throw std::invalid_argument("sample points exceed the degree bound");
  }
  return p;
}

long grassmannian_dim_bound(const DimVec& dims, const DimVec& f) {
  long s = 0;
  for (size_t v = 0; v < dims.size(); ++v) s += f[v] * (dims[v] - f[v]);
  return s;
}

}  // namespace qflag
