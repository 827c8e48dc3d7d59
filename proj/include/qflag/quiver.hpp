#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

using DimVec = std::vector<long>;

struct Arrow {
  std::string id;
  size_t src = 0;
  size_t tgt = 0;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  size_t num_vertices() const { return vertices_.size(); }
  size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex(size_t i) const { return vertices_[i]; }
  const Arrow& arrow(size_t i) const { return arrows_[i]; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // Throw std::out_of_range on unknown ids.
  size_t vertex_index(const std::string& id) const;
  size_t arrow_index(const std::string& id) const;

  const std::vector<size_t>& out_arrows(size_t v) const { return out_[v]; }
  const std::vector<size_t>& in_arrows(size_t v) const { return in_[v]; }

  bool connected() const;
  bool acyclic() const;
  std::vector<size_t> topological_order() const;
  Quiver opposite() const;

  bool operator==(const Quiver& o) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<size_t>> out_, in_;
};

enum class Family { A, D, E, AffineA, AffineD, AffineE, Other };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Position of a vertex in the two-row drawing: row 0 is the raised row.
struct Cell {
  int row = 1;
  int col = 0;
};

struct QuiverShape {
  Family family = Family::Other;
  int rank = 0;
  std::vector<Cell> layout;  // indexed by vertex
  long branch = -1;          // degree-3 vertex for D/E types
  bool dynkin() const { return family == Family::A || family == Family::D || family == Family::E; }
  bool affine() const {
    return family == Family::AffineA || family == Family::AffineD || family == Family::AffineE;
  }
  std::string name() const;
};

QuiverShape classify(const Quiver& q);

// Quiver with vertices "1".."n" numbered along the drawing: bottom row left to
// right, then the raised row. Arrows point from lower to higher number.
Quiver standard_quiver(Family family, int rank);

std::vector<DimVec> positive_roots(const Quiver& q);
DimVec maximal_root(const Quiver& q);
DimVec minimal_imaginary_root(const Quiver& q);

// Symmetrised form (a,b) = 2<a,b>_sym on the underlying graph.
long symmetric_form(const Quiver& q, const DimVec& a, const DimVec& b);

// sum f_v g_v - sum_arrows f_s g_t + sum_virtual f_s g_t.
long euler_form(const Quiver& q, const std::vector<std::pair<size_t, size_t>>& virtual_arrows,
                const DimVec& f, const DimVec& g);
long euler_form(const Quiver& q, const DimVec& f, const DimVec& g);

// Matrix of path counts: paths[i][j] = number of paths from i to j.
std::vector<std::vector<long>> path_counts(const Quiver& q);

DimVec coxeter_transform(const Quiver& q, const DimVec& f);
DimVec coxeter_inverse(const Quiver& q, const DimVec& f);

// Two-row drawing, raised row first. Trailing blanks are trimmed.
std::string format_layout(const QuiverShape& shape, const DimVec& v);
// Compact "(raised;bottom)" label, e.g. (1;12221).
std::string format_stacked(const QuiverShape& shape, const DimVec& v);
// Accepts "(1;12221)", "1;12221" or a comma list in vertex order.
DimVec parse_dimvec(const QuiverShape& shape, const std::string& s);

std::string dimvec_str(const DimVec& v);
long total(const DimVec& v);
bool leq(const DimVec& a, const DimVec& b);
DimVec vadd(const DimVec& a, const DimVec& b);
DimVec vsub(const DimVec& a, const DimVec& b);

}  // namespace qflag
