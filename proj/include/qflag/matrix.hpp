#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qflag/field.hpp"

namespace qflag {

template <class K>
class Matrix {
 public:
  using E = typename K::Elem;

  Matrix() = default;
  Matrix(const K& k, size_t rows, size_t cols)
      : k_(k), rows_(rows), cols_(cols), a_(rows * cols, k.zero()) {}

  static Matrix identity(const K& k, size_t n) {
    Matrix m(k, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = k.one();
    return m;
  }

  static Matrix from_ints(const K& k, const std::vector<std::vector<long>>& rows, size_t cols = 0) {
    size_t c = rows.empty() ? cols : rows[0].size();
    Matrix m(k, rows.size(), c);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (size_t j = 0; j < c; ++j) m(i, j) = k.from_int(rows[i][j]);
    }
    return m;
  }

  const K& field() const { return k_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  E& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const E& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!k_.is_zero(x)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!k_.eq(a_[i], o.a_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(k_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t l = 0; l < cols_; ++l) {
        const E& x = (*this)(i, l);
        if (k_.is_zero(x)) continue;
        for (size_t j = 0; j < o.cols_; ++j) r(i, j) = k_.add(r(i, j), k_.mul(x, o(l, j)));
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = k_.add(a_[i], o.a_[i]);
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = k_.sub(a_[i], o.a_[i]);
    return r;
  }

  Matrix operator-() const {
    Matrix r(*this);
    for (auto& x : r.a_) x = k_.neg(x);
    return r;
  }

  Matrix scaled(const E& s) const {
    Matrix r(*this);
    for (auto& x : r.a_) x = k_.mul(x, s);
    return r;
  }

  Matrix transpose() const {
    Matrix r(k_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    Matrix r(k_, nr, nc);
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  void set_block(size_t r0, size_t c0, const Matrix& b) {
    for (size_t i = 0; i < b.rows_; ++i)
      for (size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix column(size_t j) const { return block(0, j, rows_, 1); }

  Matrix select_columns(const std::vector<size_t>& idx) const {
    Matrix r(k_, rows_, idx.size());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
  }

  static Matrix hstack(const K& k, size_t rows, const std::vector<Matrix>& parts) {
    size_t c = 0;
    for (const auto& p : parts) {
      if (p.rows_ != rows) throw std::invalid_argument("hstack row mismatch");
      c += p.cols_;
    }
    Matrix r(k, rows, c);
    size_t off = 0;
    for (const auto& p : parts) {
      r.set_block(0, off, p);
      off += p.cols_;
    }
    return r;
  }

  static Matrix vstack(const K& k, size_t cols, const std::vector<Matrix>& parts) {
    size_t n = 0;
    for (const auto& p : parts) {
      if (p.cols_ != cols) throw std::invalid_argument("vstack column mismatch");
      n += p.rows_;
    }
    Matrix r(k, n, cols);
    size_t off = 0;
    for (const auto& p : parts) {
      r.set_block(off, 0, p);
      off += p.rows_;
    }
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << k_.str((*this)(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }

  std::vector<E>& data() { return a_; }
  const std::vector<E>& data() const { return a_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  K k_{};
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<E> a_;
};

using QMatrix = Matrix<Rationals>;
using FMatrix = Matrix<PrimeField>;

// Reduced row echelon form; pivot columns in increasing order.
template <class K>
struct Rref {
  Matrix<K> r;
  std::vector<size_t> pivots;
};

template <class K>
Rref<K> rref(const Matrix<K>& m) {
  const K& k = m.field();
  Rref<K> out{m, {}};
  Matrix<K>& a = out.r;
  size_t row = 0;
  for (size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    size_t piv = row;
    while (piv < a.rows() && k.is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    auto inv = k.div(k.one(), a(row, c));
    for (size_t j = c; j < a.cols(); ++j) a(row, j) = k.mul(a(row, j), inv);
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || k.is_zero(a(i, c))) continue;
      auto f = a(i, c);
      for (size_t j = c; j < a.cols(); ++j) a(i, j) = k.sub(a(i, j), k.mul(f, a(row, j)));
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

template <class K>
size_t rank(const Matrix<K>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref(m).pivots.size();
}

// Columns form a basis of the right kernel.
template <class K>
Matrix<K> kernel_basis(const Matrix<K>& m) {
  const K& k = m.field();
  auto rr = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : rr.pivots) is_piv[p] = true;
  std::vector<size_t> free;
  for (size_t j = 0; j < m.cols(); ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix<K> ker(k, m.cols(), free.size());
  for (size_t t = 0; t < free.size(); ++t) {
    ker(free[t], t) = k.one();
    for (size_t i = 0; i < rr.pivots.size(); ++i) ker(rr.pivots[i], t) = k.neg(rr.r(i, free[t]));
  }
  return ker;
}

// Rows form a basis of the left kernel {y : y m = 0}.
template <class K>
Matrix<K> left_kernel(const Matrix<K>& m) {
  return kernel_basis(m.transpose()).transpose();
}

template <class K>
struct SolveResult {
  bool consistent = false;
  Matrix<K> particular;  // cols(a) x cols(b)
  Matrix<K> kernel;      // columns span ker a
};

// Solves a x = b (b may have several columns).
template <class K>
SolveResult<K> solve(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const K& k = a.field();
  auto aug = Matrix<K>::hstack(k, a.rows(), {a, b});
  auto rr = rref(aug);
  SolveResult<K> out;
  out.kernel = kernel_basis(a);
  out.particular = Matrix<K>(k, a.cols(), b.cols());
  for (size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] >= a.cols()) return out;
    for (size_t j = 0; j < b.cols(); ++j) out.particular(rr.pivots[i], j) = rr.r(i, a.cols() + j);
  }
  out.consistent = true;
  return out;
}

// Canonical basis of the column space (reduced column echelon form).
template <class K>
Matrix<K> column_space(const Matrix<K>& m) {
  if (m.cols() == 0) return Matrix<K>(m.field(), m.rows(), 0);
  auto rr = rref(m.transpose());
  return rr.r.block(0, 0, rr.pivots.size(), m.rows()).transpose();
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  auto s = solve(m, Matrix<K>::identity(m.field(), m.rows()));
  if (!s.consistent || s.kernel.cols() != 0) throw std::domain_error("singular matrix");
  return s.particular;
}

// x with m x = I, for m of full row rank.
template <class K>
Matrix<K> right_inverse(const Matrix<K>& m) {
  auto s = solve(m, Matrix<K>::identity(m.field(), m.rows()));
  if (!s.consistent) throw std::domain_error("matrix lacks full row rank");
  return s.particular;
}

// Subspaces are given by spanning columns in a common ambient space.
template <class K>
Matrix<K> subspace_sum(const Matrix<K>& u, const Matrix<K>& v) {
  return column_space(Matrix<K>::hstack(u.field(), u.rows(), {u, v}));
}

template <class K>
bool subspace_contains(const Matrix<K>& big, const Matrix<K>& small) {
  if (small.cols() == 0) return true;
  return rank(Matrix<K>::hstack(big.field(), big.rows(), {big, small})) == rank(big);
}

template <class K>
Matrix<K> subspace_intersection(const Matrix<K>& u, const Matrix<K>& v) {
  const K& k = u.field();
  auto ub = column_space(u), vb = column_space(v);
  auto ker = kernel_basis(Matrix<K>::hstack(k, u.rows(), {ub, -vb}));
  return column_space(ub * ker.block(0, 0, ub.cols(), ker.cols()));
}

// {x : a x in span(u)}.
template <class K>
Matrix<K> preimage(const Matrix<K>& a, const Matrix<K>& u) {
  const K& k = a.field();
  auto ker = kernel_basis(Matrix<K>::hstack(k, a.rows(), {a, -u}));
  return column_space(ker.block(0, 0, a.cols(), ker.cols()));
}

// Coordinates c with basis * c = v, for basis of full column rank and v in its span.
template <class K>
Matrix<K> coordinates(const Matrix<K>& basis, const Matrix<K>& v) {
  auto s = solve(basis, v);
  if (!s.consistent) throw std::domain_error("vector outside subspace");
  return s.particular;
}

inline std::optional<FMatrix> reduce_mod(const QMatrix& m, const PrimeField& f) {
  FMatrix r(f, m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!reduce_mod(m(i, j), f, r(i, j))) return std::nullopt;
  return r;
}

}  // namespace qflag
