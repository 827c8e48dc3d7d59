#include "qflag/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qflag/matrix.hpp"

namespace qflag {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex id '" + v + "'");
  std::set<std::string> aseen;
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    if (!aseen.insert(a.id).second) throw std::invalid_argument("duplicate arrow id '" + a.id + "'");
    if (a.src >= vertices_.size() || a.tgt >= vertices_.size())
      throw std::invalid_argument("arrow '" + a.id + "' has an endpoint outside the vertex set");
    out_[a.src].push_back(i);
    in_[a.tgt].push_back(i);
  }
}

size_t Quiver::vertex_index(const std::string& id) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return i;
  throw std::out_of_range("unknown vertex '" + id + "'");
}

size_t Quiver::arrow_index(const std::string& id) const {
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return i;
  throw std::out_of_range("unknown arrow '" + id + "'");
}

bool Quiver::connected() const {
  if (vertices_.empty()) return false;
  std::vector<bool> vis(vertices_.size(), false);
  std::deque<size_t> todo{0};
  vis[0] = true;
  size_t n = 1;
  while (!todo.empty()) {
    size_t v = todo.front();
    todo.pop_front();
    auto visit = [&](size_t w) {
      if (!vis[w]) {
        vis[w] = true;
        ++n;
        todo.push_back(w);
      }
    };
    for (auto a : out_[v]) visit(arrows_[a].tgt);
    for (auto a : in_[v]) visit(arrows_[a].src);
  }
  return n == vertices_.size();
}

std::vector<size_t> Quiver::topological_order() const {
  std::vector<size_t> indeg(vertices_.size(), 0), order;
  for (const auto& a : arrows_) ++indeg[a.tgt];
  std::deque<size_t> ready;
  for (size_t v = 0; v < vertices_.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (auto a : out_[v])
      if (--indeg[arrows_[a].tgt] == 0) ready.push_back(arrows_[a].tgt);
  }
  return order;
}

bool Quiver::acyclic() const { return topological_order().size() == vertices_.size(); }

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  for (const auto& a : arrows_) rev.push_back({a.id, a.tgt, a.src});
  return Quiver(vertices_, rev);
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id != o.arrows_[i].id || arrows_[i].src != o.arrows_[i].src ||
        arrows_[i].tgt != o.arrows_[i].tgt)
      return false;
  return true;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::AffineA: return "affA";
    case Family::AffineD: return "affD";
    case Family::AffineE: return "affE";
    default: return "other";
  }
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  if (s == "affA") return Family::AffineA;
  if (s == "affD") return Family::AffineD;
  if (s == "affE") return Family::AffineE;
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::string QuiverShape::name() const {
  if (family == Family::Other) return "other";
  return family_name(family) + std::to_string(rank);
}

namespace {

using Adj = std::vector<std::vector<size_t>>;

Adj neighbours(const Quiver& q) {
  Adj adj(q.num_vertices());
  for (const auto& a : q.arrows()) {
    adj[a.src].push_back(a.tgt);
    if (a.src != a.tgt) adj[a.tgt].push_back(a.src);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

// Walk from start away from prev until a vertex of degree != 2 (inclusive).
std::vector<size_t> walk_arm(const Adj& adj, size_t prev, size_t start) {
  std::vector<size_t> arm{start};
  size_t cur = start;
  while (adj[cur].size() == 2) {
    size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    arm.push_back(cur);
  }
  return arm;
}

size_t min_of(const std::vector<size_t>& v) { return *std::min_element(v.begin(), v.end()); }

void star_layout(QuiverShape& s, const Adj& adj, size_t b) {
  std::vector<std::vector<size_t>> arms;
  for (auto w : adj[b]) arms.push_back(walk_arm(adj, b, w));
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() > y.size();
    return min_of(x) < min_of(y);
  });
  s.layout.assign(adj.size(), Cell{});
  int col = 0;
  for (auto it = arms[0].rbegin(); it != arms[0].rend(); ++it) s.layout[*it] = {1, col++};
  int bcol = col;
  s.layout[b] = {1, col++};
  for (auto v : arms[1]) s.layout[v] = {1, col++};
  int tcol = bcol;
  for (auto v : arms[2]) s.layout[v] = {0, tcol--};
  s.branch = (long)b;
}

}  // namespace

QuiverShape classify(const Quiver& q) {
  if (!q.connected()) throw std::invalid_argument("classify: quiver is not connected");
  QuiverShape s;
  size_t n = q.num_vertices(), e = q.num_arrows();
  bool loops = false;
  std::set<std::pair<size_t, size_t>> edges;
  bool multi = false;
  for (const auto& a : q.arrows()) {
    if (a.src == a.tgt) loops = true;
    auto key = std::minmax(a.src, a.tgt);
    if (!edges.insert(key).second) multi = true;
  }
  s.layout.assign(n, Cell{});
  for (size_t v = 0; v < n; ++v) s.layout[v] = {1, (int)v};
  if (loops) {
    if (n == 1 && e == 1) {
      s.family = Family::AffineA;
      s.rank = 0;
      s.layout[0] = {1, 0};
    }
    return s;
  }
  std::vector<size_t> deg(n, 0);
  for (const auto& a : q.arrows()) {
    ++deg[a.src];
    ++deg[a.tgt];
  }
  Adj adj = neighbours(q);
  if (e == n) {
    // single cycle (including the Kronecker quiver)
    if (std::all_of(deg.begin(), deg.end(), [](size_t d) { return d == 2; })) {
      s.family = Family::AffineA;
      s.rank = (int)n - 1;
      std::vector<size_t> order{0};
      if (n == 2) {
        order.push_back(1);
      } else {
        size_t prev = 0, cur = adj[0][0];
        while (cur != 0) {
          order.push_back(cur);
          size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = nxt;
        }
      }
      size_t bottom = n - 1;
      for (size_t i = 0; i < bottom; ++i) s.layout[order[i]] = {1, (int)i};
      s.layout[order[bottom]] = {0, (int)(bottom - 1) / 2};
    }
    return s;
  }
  if (e + 1 != n || multi) return s;
  std::vector<size_t> br;
  size_t maxdeg = 0;
  for (size_t v = 0; v < n; ++v) {
    maxdeg = std::max(maxdeg, deg[v]);
    if (deg[v] >= 3) br.push_back(v);
  }
  if (maxdeg <= 2) {
    s.family = Family::A;
    s.rank = (int)n;
    size_t start = n;
    for (size_t v = 0; v < n && start == n; ++v)
      if (deg[v] <= 1) start = v;
    std::vector<size_t> path = n == 1 ? std::vector<size_t>{0} : walk_arm(adj, n, start);
    if (n > 1) {
      path = {start};
      size_t prev = n, cur = start;
      while (path.size() < n) {
        size_t nxt = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = nxt;
        path.push_back(cur);
      }
    }
    for (size_t i = 0; i < n; ++i) s.layout[path[i]] = {1, (int)i};
    return s;
  }
  if (br.size() == 1 && deg[br[0]] == 4 && n == 5) {
    s.family = Family::AffineD;
    s.rank = 4;
    size_t c = br[0];
    const auto& l = adj[c];
    s.layout[l[0]] = {1, 0};
    s.layout[c] = {1, 1};
    s.layout[l[1]] = {1, 2};
    s.layout[l[2]] = {0, 1};
    s.layout[l[3]] = {0, 2};
    s.branch = (long)c;
    return s;
  }
  if (br.size() == 1 && deg[br[0]] == 3) {
    size_t b = br[0];
    std::vector<size_t> len;
    for (auto w : adj[b]) len.push_back(walk_arm(adj, b, w).size());
    std::sort(len.begin(), len.end());
    std::vector<size_t> L = len;
    if (L[0] == 1 && L[1] == 1) {
      s.family = Family::D;
      s.rank = (int)n;
    } else if (L == std::vector<size_t>{1, 2, 2} || L == std::vector<size_t>{1, 2, 3} ||
               L == std::vector<size_t>{1, 2, 4}) {
      s.family = Family::E;
      s.rank = (int)n;
    } else if (L == std::vector<size_t>{2, 2, 2} || L == std::vector<size_t>{1, 3, 3} ||
               L == std::vector<size_t>{1, 2, 5}) {
      s.family = Family::AffineE;
      s.rank = (int)n - 1;
    } else {
      return s;
    }
    star_layout(s, adj, b);
    return s;
  }
  if (br.size() == 2 && deg[br[0]] == 3 && deg[br[1]] == 3) {
    auto leaves = [&](size_t b) {
      std::vector<size_t> l;
      for (auto w : adj[b])
        if (deg[w] == 1) l.push_back(w);
      return l;
    };
    auto l0 = leaves(br[0]), l1 = leaves(br[1]);
    if (l0.size() != 2 || l1.size() != 2) return s;
    size_t b1 = br[0], b2 = br[1];
    if (min_of(l1) < min_of(l0)) {
      std::swap(b1, b2);
      std::swap(l0, l1);
    }
    // path b1 .. b2
    std::vector<size_t> mid;
    size_t prev = b1, cur = b1;
    for (auto w : adj[b1])
      if (deg[w] != 1) cur = w;
    mid.push_back(b1);
    while (cur != b2) {
      mid.push_back(cur);
      size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
    }
    mid.push_back(b2);
    s.family = Family::AffineD;
    s.rank = (int)n - 1;
    int col = 0;
    s.layout[l0[0]] = {1, col++};
    int c1 = col;
    for (auto v : mid) s.layout[v] = {1, col++};
    int c2 = col - 1;
    s.layout[l1[0]] = {1, col++};
    s.layout[l0[1]] = {0, c1};
    s.layout[l1[1]] = {0, c2};
    s.branch = (long)b1;
    return s;
  }
  return s;
}

Quiver standard_quiver(Family family, int rank) {
  std::vector<std::pair<int, int>> edges;  // 1-based
  int n = 0;
  auto path = [&](int from, int to) {
    for (int i = from; i < to; ++i) edges.push_back({i, i + 1});
  };
  switch (family) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
      n = rank;
      path(1, n);
      break;
    case Family::D:
      if (rank < 4) throw std::invalid_argument("D_n needs n >= 4");
      n = rank;
      path(1, n - 1);
      edges.push_back({n - 2, n});
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
      n = rank;
      path(1, n - 1);
      edges.push_back({rank == 6 ? 3 : rank == 7 ? 4 : 5, n});
      break;
    case Family::AffineA:
      if (rank < 1) throw std::invalid_argument("affine A_n needs n >= 1");
      n = rank + 1;
      path(1, rank);
      edges.push_back({1, n});
      edges.push_back({rank, n});
      break;
    case Family::AffineD:
      if (rank < 4) throw std::invalid_argument("affine D_n needs n >= 4");
      n = rank + 1;
      path(1, rank - 1);
      edges.push_back({2, rank});
      edges.push_back({rank - 2, rank + 1});
      break;
    case Family::AffineE:
      if (rank < 6 || rank > 8) throw std::invalid_argument("affine E_n needs 6 <= n <= 8");
      n = rank + 1;
      if (rank == 6) {
        path(1, 5);
        edges.push_back({3, 6});
        edges.push_back({6, 7});
      } else if (rank == 7) {
        path(1, 7);
        edges.push_back({4, 8});
      } else {
        path(1, 8);
        edges.push_back({6, 9});
      }
      break;
    default:
      throw std::invalid_argument("no standard quiver for this family");
  }
  std::vector<std::string> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  std::vector<Arrow> as;
  for (size_t i = 0; i < edges.size(); ++i)
    as.push_back({"a" + std::to_string(i + 1), (size_t)edges[i].first - 1, (size_t)edges[i].second - 1});
  return Quiver(vs, as);
}

long symmetric_form(const Quiver& q, const DimVec& a, const DimVec& b) {
  long s = 0;
  for (size_t i = 0; i < q.num_vertices(); ++i) s += 2 * a[i] * b[i];
  for (const auto& ar : q.arrows()) s -= a[ar.src] * b[ar.tgt] + a[ar.tgt] * b[ar.src];
  return s;
}

std::vector<DimVec> positive_roots(const Quiver& q) {
  auto shape = classify(q);
  if (!shape.dynkin()) throw std::invalid_argument("positive_roots: quiver is not of Dynkin type");
  size_t n = q.num_vertices();
  std::set<DimVec> seen;
  std::deque<DimVec> todo;
  for (size_t i = 0; i < n; ++i) {
    DimVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    DimVec a = todo.front();
    todo.pop_front();
    for (size_t i = 0; i < n; ++i) {
      DimVec e(n, 0);
      e[i] = 1;
      long c = symmetric_form(q, a, e);
      if (c == 0) continue;
      DimVec r = a;
      r[i] -= c;
      if (std::any_of(r.begin(), r.end(), [](long x) { return x < 0; })) continue;
      if (total(r) == 0) continue;
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  std::vector<DimVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const DimVec& x, const DimVec& y) {
    if (total(x) != total(y)) return total(x) < total(y);
    return x < y;
  });
  return out;
}

DimVec maximal_root(const Quiver& q) { return positive_roots(q).back(); }

DimVec minimal_imaginary_root(const Quiver& q) {
  auto shape = classify(q);
  if (!shape.affine()) throw std::invalid_argument("minimal_imaginary_root: quiver is not affine");
  size_t n = q.num_vertices();
  Rationals k;
  QMatrix c(k, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      DimVec a(n, 0), b(n, 0);
      a[i] = 1;
      b[j] = 1;
      c(i, j) = symmetric_form(q, a, b);
    }
  auto ker = kernel_basis(c);
  if (ker.cols() != 1) throw std::logic_error("affine Cartan matrix without a one-dimensional kernel");
  mpz_class l = 1;
  for (size_t i = 0; i < n; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ker(i, 0).get_den_mpz_t());
  std::vector<mpz_class> v(n);
  mpz_class g = 0;
  for (size_t i = 0; i < n; ++i) {
    mpq_class x = ker(i, 0) * l;
    v[i] = x.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
  }
  DimVec out(n);
  int sign = v[0] < 0 ? -1 : 1;
  for (size_t i = 0; i < n; ++i) out[i] = sign * mpz_class(v[i] / g).get_si();
  return out;
}

long euler_form(const Quiver& q, const std::vector<std::pair<size_t, size_t>>& virtual_arrows,
                const DimVec& f, const DimVec& g) {
  if (f.size() != q.num_vertices() || g.size() != q.num_vertices())
    throw std::invalid_argument("euler_form: dimension vector does not match the vertex set");
  long s = 0;
  for (size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  for (const auto& a : q.arrows()) s -= f[a.src] * g[a.tgt];
  for (const auto& [src, tgt] : virtual_arrows) s += f[src] * g[tgt];
  return s;
}

long euler_form(const Quiver& q, const DimVec& f, const DimVec& g) { return euler_form(q, {}, f, g); }

std::vector<std::vector<long>> path_counts(const Quiver& q) {
  if (!q.acyclic()) throw std::invalid_argument("path_counts: quiver has an oriented cycle");
  size_t n = q.num_vertices();
  std::vector<std::vector<long>> p(n, std::vector<long>(n, 0));
  auto order = q.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    size_t v = *it;
    p[v][v] = 1;
    for (auto a : q.out_arrows(v)) {
      size_t w = q.arrow(a).tgt;
      for (size_t j = 0; j < n; ++j) p[v][j] += p[w][j];
    }
  }
  return p;
}

namespace {

// c(j,i) = dim P(i)_j = number of paths i -> j.
QMatrix cartan(const Quiver& q) {
  auto p = path_counts(q);
  size_t n = q.num_vertices();
  Rationals k;
  QMatrix c(k, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) c(j, i) = p[i][j];
  return c;
}

DimVec apply_matrix(const QMatrix& m, const DimVec& f) {
  Rationals k;
  QMatrix v(k, f.size(), 1);
  for (size_t i = 0; i < f.size(); ++i) v(i, 0) = f[i];
  auto r = m * v;
  DimVec out(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    if (r(i, 0).get_den() != 1) throw std::logic_error("non-integral Coxeter image");
    out[i] = r(i, 0).get_num().get_si();
  }
  return out;
}

}  // namespace

DimVec coxeter_transform(const Quiver& q, const DimVec& f) {
  auto c = cartan(q);
  auto r = apply_matrix(-(c.transpose() * inverse(c)), f);
  if (std::any_of(r.begin(), r.end(), [](long x) { return x < 0; }) || total(r) == 0)
    throw std::invalid_argument("coxeter_transform: " + dimvec_str(f) + " is projective");
  return r;
}

DimVec coxeter_inverse(const Quiver& q, const DimVec& f) {
  auto c = cartan(q);
  auto r = apply_matrix(-(c * inverse(c.transpose())), f);
  if (std::any_of(r.begin(), r.end(), [](long x) { return x < 0; }) || total(r) == 0)
    throw std::invalid_argument("coxeter_inverse: " + dimvec_str(f) + " is injective");
  return r;
}

std::string format_layout(const QuiverShape& shape, const DimVec& v) {
  int maxcol = 0;
  size_t width = 1;
  for (size_t i = 0; i < v.size(); ++i) {
    maxcol = std::max(maxcol, shape.layout[i].col);
    width = std::max(width, std::to_string(v[i]).size());
  }
  std::vector<std::vector<std::string>> grid(2, std::vector<std::string>(maxcol + 1, ""));
  for (size_t i = 0; i < v.size(); ++i) grid[shape.layout[i].row][shape.layout[i].col] = std::to_string(v[i]);
  std::string out;
  for (int r = 0; r < 2; ++r) {
    std::string line;
    for (int c = 0; c <= maxcol; ++c) {
      std::string cell = grid[r][c];
      cell = std::string(width - std::min(width, cell.size()), ' ') + cell;
      line += (c ? " " : "") + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (r == 0 && line.empty()) continue;
    out += line + "\n";
  }
  return out;
}

namespace {

std::vector<std::vector<size_t>> rows_of(const QuiverShape& shape) {
  std::vector<std::vector<size_t>> rows(2);
  for (size_t i = 0; i < shape.layout.size(); ++i) rows[shape.layout[i].row].push_back(i);
  for (auto& r : rows)
    std::sort(r.begin(), r.end(), [&](size_t a, size_t b) { return shape.layout[a].col < shape.layout[b].col; });
  return rows;
}

}  // namespace

std::string format_stacked(const QuiverShape& shape, const DimVec& v) {
  auto rows = rows_of(shape);
  bool wide = std::any_of(v.begin(), v.end(), [](long x) { return x > 9 || x < 0; });
  auto part = [&](const std::vector<size_t>& idx) {
    std::string s;
    for (size_t j = 0; j < idx.size(); ++j) s += (wide && j ? "," : "") + std::to_string(v[idx[j]]);
    return s;
  };
  if (rows[0].empty()) return "(" + part(rows[1]) + ")";
  return "(" + part(rows[0]) + ";" + part(rows[1]) + ")";
}

DimVec parse_dimvec(const QuiverShape& shape, const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  size_t n = shape.layout.size();
  auto parse_list = [](const std::string& t) {
    std::vector<long> out;
    if (t.empty()) return out;
    if (t.find(',') != std::string::npos) {
      std::stringstream ss(t);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    } else {
      for (char c : t) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in dimension vector");
        out.push_back(c - '0');
      }
    }
    return out;
  };
  auto semi = s.find(';');
  DimVec out(n, 0);
  if (semi == std::string::npos) {
    auto rows = rows_of(shape);
    auto vals = parse_list(s);
    if (s.find(',') == std::string::npos && rows[0].empty() && vals.size() == n) {
      for (size_t j = 0; j < n; ++j) out[rows[1][j]] = vals[j];
      return out;
    }
    if (vals.size() != n) throw std::invalid_argument("dimension vector '" + text + "' has wrong length");
    return DimVec(vals.begin(), vals.end());
  }
  auto rows = rows_of(shape);
  auto top = parse_list(s.substr(0, semi)), bottom = parse_list(s.substr(semi + 1));
  if (top.size() != rows[0].size() || bottom.size() != rows[1].size())
    throw std::invalid_argument("dimension vector '" + text + "' does not fit the diagram");
  for (size_t j = 0; j < top.size(); ++j) out[rows[0][j]] = top[j];
  for (size_t j = 0; j < bottom.size(); ++j) out[rows[1][j]] = bottom[j];
  return out;
}

std::string dimvec_str(const DimVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

long total(const DimVec& v) { return std::accumulate(v.begin(), v.end(), 0L); }

bool leq(const DimVec& a, const DimVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

DimVec vadd(const DimVec& a, const DimVec& b) {
  DimVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

DimVec vsub(const DimVec& a, const DimVec& b) {
  DimVec r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

}  // namespace qflag
