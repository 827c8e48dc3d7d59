#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qflag/artheory.hpp"
#include "qflag/extended.hpp"

namespace qflag {

// Cell dimension -> multiplicity.
using CellMultiset = std::map<long, mpz_class>;

mpz_class evaluate(const CellMultiset& c, long q);
long cell_total(const CellMultiset& c);
CellMultiset shift(const CellMultiset& c, long by);
CellMultiset product(const CellMultiset& a, const CellMultiset& b);
void accumulate(CellMultiset& into, const CellMultiset& c);
std::string cells_str(const CellMultiset& c);

// GR: Gr_f(Phi(M)) for M the direct sum of the indecomposables with the listed roots.
// U: Gr_f(Phi(A)) minus Gr_f(Phi(B)), A the knitted indecomposable with root `a`, B <= A.
struct Piece {
  enum class Kind { GR, U } kind = Kind::GR;
  std::vector<DimVec> summands;
  DimVec a;
  QSub b;
  DimVec f;
};

// The numeric recursion met a stratum whose bundle rank is negative.
struct RecursionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PaveOptions {
  // Try the remaining minimal sectional monos when the first choice fails.
  bool backtrack = true;
  // U pieces split only along irreducible monos (sectional paths of length one);
  // when false, any minimal sectional mono is accepted.
  bool irreducible_u = true;
};

struct PaveOutcome {
  bool resolved = false;
  CellMultiset cells;
  // Innermost failing piece last.
  std::vector<std::string> failure;
};

struct TrailEntry {
  std::string piece;
  std::string rule;
};

struct BacktrackEvent {
  std::string piece;
  std::string candidate;
  bool resolved = false;
  std::vector<std::string> failure;
};

// Small-order structure of Gr_f(T): empty, or a product of `factors` projective lines.
struct SmallOrderShape {
  bool empty = false;
  long factors = 0;
};
// nullopt when T has a space of dimension > 2, a map of non-maximal rank, or a
// cycle of isomorphisms that does not act by scalars.
std::optional<SmallOrderShape> small_order_structure(const QRep& t, const DimVec& f);

class PavingEngine {
 public:
  PavingEngine(const QuiverPtr& q, int d, bool strict, PaveOptions opt = {});

  const ExtendedQuiver& extended() const { return eq_; }
  const ARQuiver& ar() const { return ar_; }

  PaveOutcome pave(const QRep& m, const DimVec& f);
  PaveOutcome pave_piece(const Piece& p);
  // Numeric evaluation of the recursion at q = p; U pieces by subtraction.
  mpz_class count_recursive(const QRep& m, const DimVec& f, long p);

  std::string describe(const Piece& p) const;
  std::vector<TrailEntry> trail() const;
  const std::vector<BacktrackEvent>& events() const { return events_; }

 private:
  struct MonoData {
    bool valid = false;
    std::string why;
    size_t x = 0;
    QMorphism emb;
    QSub image;
    Quotient<Rationals> s;
    std::vector<DimVec> s_roots;
    QSub x_s;  // subspaces of the knitted X
  };

  PaveOutcome gr(const std::vector<DimVec>& summands, const DimVec& f);
  PaveOutcome u(const DimVec& a, const QSub& b, const DimVec& f);
  PaveOutcome split_sum(const std::vector<DimVec>& summands, const DimVec& f);
  PaveOutcome mono_strata(size_t y, const MonoData& md, const DimVec& f, const QSub* pi_b);
  PaveOutcome u_quotient(const MonoData& md, const QSub& pi_b, const DimVec& g);

  size_t split_index(const std::vector<DimVec>& summands);
  const MonoData& mono(size_t y, size_t k);
  const std::vector<SectionalMono>& monos(size_t y);
  DimVec phi_total(const std::vector<DimVec>& summands) const;
  std::string key(const Piece& p) const;
  std::vector<DimVec> roots_of(const QRep& m) const;

  mpz_class count_gr(const std::vector<DimVec>& summands, const DimVec& f, long p);

  ExtendedQuiver eq_;
  const ARQuiver& ar_;
  PaveOptions opt_;
  std::map<std::string, PaveOutcome> memo_;
  std::map<std::string, std::string> rules_;
  std::map<std::string, mpz_class> count_memo_;
  std::map<std::pair<DimVec, DimVec>, long> ext1_;
  std::map<size_t, std::vector<SectionalMono>> monos_;
  std::map<std::pair<size_t, size_t>, MonoData> mono_data_;
  std::vector<BacktrackEvent> events_;
};

}  // namespace qflag
