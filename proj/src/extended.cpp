#include "qflag/extended.hpp"

#include <stdexcept>

namespace qflag {

ExtendedQuiver build_extended(const QuiverPtr& q, int d, bool strict) {
  if (d < 1) throw std::invalid_argument("extended quiver needs d >= 1");
  if (strict && d < 2) throw std::invalid_argument("strict extended quiver needs d >= 2");
  for (const auto& v : q->vertices())
    if (v.find('@') != std::string::npos) throw std::invalid_argument("vertex id may not contain '@'");
  for (const auto& a : q->arrows())
    if (a.id.find('@') != std::string::npos) throw std::invalid_argument("arrow id may not contain '@'");
  ExtendedQuiver eq;
  eq.base = q;
  eq.d = d;
  eq.strict = strict;
  size_t n = q->num_vertices();
  std::vector<std::string> vs;
  for (int r = 1; r <= d; ++r)
    for (size_t i = 0; i < n; ++i) vs.push_back(q->vertex(i) + "@" + std::to_string(r));
  std::vector<Arrow> as;
  for (int r = 1; r < d; ++r)
    for (size_t i = 0; i < n; ++i)
      as.push_back({"v:" + q->vertex(i) + "@" + std::to_string(r), eq.vertex(i, r), eq.vertex(i, r + 1)});
  for (int r = strict ? 2 : 1; r <= d; ++r)
    for (const auto& a : q->arrows())
      as.push_back({a.id + "@" + std::to_string(r), eq.vertex(a.src, r), eq.vertex(a.tgt, strict ? r - 1 : r)});
  eq.quiver = std::make_shared<const Quiver>(vs, as);
  if (!strict) {
    for (int r = 1; r < d; ++r)
      for (size_t a = 0; a < q->num_arrows(); ++a) {
        const auto& ar = q->arrow(a);
        VirtualArrow c;
        c.id = "c:" + ar.id + "@" + std::to_string(r);
        c.src = eq.vertex(ar.src, r);
        c.tgt = eq.vertex(ar.tgt, r + 1);
        c.first1 = eq.vertical(ar.src, r);
        c.second1 = eq.level_arrow(a, r + 1);
        c.first2 = eq.level_arrow(a, r);
        c.second2 = eq.vertical(ar.tgt, r);
        eq.virtuals.push_back(c);
      }
  } else {
    for (int r = 2; r < d; ++r)
      for (size_t a = 0; a < q->num_arrows(); ++a) {
        const auto& ar = q->arrow(a);
        VirtualArrow c;
        c.id = "c:" + ar.id + "@" + std::to_string(r);
        c.src = eq.vertex(ar.src, r);
        c.tgt = eq.vertex(ar.tgt, r);
        c.first1 = eq.vertical(ar.src, r);
        c.second1 = eq.level_arrow(a, r + 1);
        c.first2 = eq.level_arrow(a, r);
        c.second2 = eq.vertical(ar.tgt, r - 1);
        eq.virtuals.push_back(c);
      }
  }
  return eq;
}

size_t ExtendedQuiver::vertical(size_t i, int r) const {
  if (r < 1 || r >= d) throw std::out_of_range("no vertical arrow at this level");
  return (size_t)(r - 1) * n() + i;
}

size_t ExtendedQuiver::level_arrow(size_t a, int r) const {
  int first = strict ? 2 : 1;
  if (r < first || r > d) throw std::out_of_range("no level arrow at this level");
  return (size_t)(d - 1) * n() + (size_t)(r - first) * base->num_arrows() + a;
}

std::vector<std::pair<size_t, size_t>> ExtendedQuiver::virtual_pairs() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (const auto& c : virtuals) out.push_back({c.src, c.tgt});
  return out;
}

DimVec phi_dims(const ExtendedQuiver& eq, const DimVec& m) {
  if (m.size() != eq.n()) throw std::invalid_argument("phi_dims: dimension vector does not match the base quiver");
  DimVec out;
  for (int r = 0; r < eq.d; ++r) out.insert(out.end(), m.begin(), m.end());
  return out;
}

long euler_R(const ExtendedQuiver& eq, const DimVec& f, const DimVec& g) {
  return euler_form(*eq.quiver, eq.virtual_pairs(), f, g);
}

std::vector<DimVec> levels(const ExtendedQuiver& eq, const DimVec& f) {
  std::vector<DimVec> out;
  for (int r = 0; r < eq.d; ++r) out.emplace_back(f.begin() + r * eq.n(), f.begin() + (r + 1) * eq.n());
  return out;
}

std::string format_levels(const ExtendedQuiver& eq, const DimVec& f) {
  std::string s;
  for (const auto& l : levels(eq, f)) s += (s.empty() ? "" : "|") + dimvec_str(l);
  return s;
}

}  // namespace qflag
