#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qflag/rep.hpp"

namespace qflag {

using QMorphism = Morphism<Rationals>;
using QSub = Subspaces<Rationals>;

// Paths in an acyclic quiver, as sequences of arrow indices in traversal order.
using Path = std::vector<size_t>;
std::vector<std::vector<std::vector<Path>>> all_paths(const Quiver& q);

QRep projective(const QuiverPtr& q, size_t i);
QRep injective(const QuiverPtr& q, size_t i);
// Transposed representation over the opposite quiver.
QRep dual(const QRep& m, const QuiverPtr& opposite);

struct ARNode {
  DimVec root;
  QRep rep;
  bool projective = false;
  bool injective = false;
  long tau = -1;      // index of tau of this node
  long tau_inv = -1;  // index of tau inverse
};

struct ARArrow {
  size_t from = 0, to = 0;
  QMorphism map;  // an irreducible morphism
};

struct ARQuiver {
  QuiverPtr q;
  QuiverShape shape;
  std::vector<ARNode> nodes;
  std::vector<ARArrow> arrows;
  std::vector<std::vector<size_t>> in, out;  // arrow indices per node
  std::map<DimVec, size_t> index;

  size_t node(const DimVec& root) const;
  std::optional<size_t> find(const DimVec& root) const;
  std::string label(size_t i) const;
  std::string label(const DimVec& v) const;
};

ARQuiver knit(const QuiverPtr& q);
// Knitted once per quiver and then reused.
const ARQuiver& ar_quiver(const QuiverPtr& q);

QRep build_indecomposable(const QuiverPtr& q, const DimVec& root);

// Matrix-level translates via the Nakayama functor on a minimal projective presentation.
QRep tau(const QRep& m);
QRep tau_inv(const QRep& m);

struct ARSequence {
  size_t left = 0;                 // tau X
  std::vector<size_t> middle;      // node indices
  size_t right = 0;                // X
  QRep middle_rep;                 // direct sum of the middle terms
  QMorphism f;                     // tau X -> E
  QMorphism g;                     // E -> X
};

ARSequence ar_sequence(const ARQuiver& ar, size_t x);
bool is_exact(const QRep& a, const QRep& b, const QRep& c, const QMorphism& f, const QMorphism& g);

// dim rad(M,N) - dim rad^2(M,N), with compositions through every indecomposable.
long irreducible_dim(const ARQuiver& ar, const QRep& m, const QRep& n);

struct SectionalPath {
  std::vector<size_t> nodes;  // X_0 ... X_t
  QMorphism composite;        // X_0 -> X_t
};

std::vector<SectionalPath> sectional_paths_into(const ARQuiver& ar, size_t y);

struct SectionalMono {
  SectionalPath path;
  size_t x = 0, y = 0;
};

// Minimal sectional monos into Y ordered by the selection rule: larger total
// dimension first, then the lexicographically larger dimension vector.
std::vector<SectionalMono> minimal_sectional_monos(const ARQuiver& ar, size_t y);
std::optional<SectionalMono> find_minimal_sectional_mono(const ARQuiver& ar, size_t y);

// Kernel of the nonzero morphism X -> tau S; requires [S,X]^1 = 1.
QSub compute_X_S(const QRep& x, const QRep& s);
// Image of the nonzero morphism tau^{-1} X -> S; requires [S,X]^1 = 1.
QSub compute_S_X(const QRep& x, const QRep& s);

// [M,N] and [M,N]^1 for M, N ranging over X, Y, S in that order.
struct HomExtTable {
  long hom[3][3];
  long ext[3][3];
};
HomExtTable hom_ext_table(const QRep& x, const QRep& y, const QRep& s);
// The values required of a minimal sectional mono X -> Y with S = Y/X.
const HomExtTable& expected_mono_table();
bool operator==(const HomExtTable& a, const HomExtTable& b);

// Multiplicities of indecomposable summands, keyed by root.
std::map<DimVec, long> decompose(const QRep& m);

// An isomorphism a -> b between isomorphic indecomposables, if one exists.
std::optional<QMorphism> find_iso(const QRep& a, const QRep& b);

std::string to_dot(const ARQuiver& ar);

}  // namespace qflag
