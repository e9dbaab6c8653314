#ifndef GSM_LINALG_HPP
#define GSM_LINALG_HPP

// Exact dense linear algebra over any field scalar S (rationals by default).
// Nothing here pivots on magnitude: the first nonzero entry is used, which is
// only correct for exact arithmetic.

#include <gsm/error.hpp>
#include <gsm/scalar.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gsm {

template <typename S>
struct EchelonT {
  MatrixT<S> rows;              // reduced row echelon form, zero rows dropped
  std::vector<Index> pivots;    // pivot column of each row, strictly increasing
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <typename S>
EchelonT<S> row_reduce(MatrixT<S> m) {
  const Index nrows = m.rows();
  const Index ncols = m.cols();
  std::vector<Index> pivots;
  Index rank = 0;
  for (Index col = 0; col < ncols && rank < nrows; ++col) {
    Index pivot_row = -1;
    for (Index r = rank; r < nrows; ++r) {
      if (!is_zero(m(r, col))) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));
    const S inv = S(1) / m(rank, col);
    for (Index c = col; c < ncols; ++c)
      if (!is_zero(m(rank, c))) m(rank, c) *= inv;
    for (Index r = 0; r < nrows; ++r) {
      if (r == rank || is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (Index c = col; c < ncols; ++c)
        if (!is_zero(m(rank, c))) m(r, c) -= factor * m(rank, c);
    }
    pivots.push_back(col);
    ++rank;
  }
  return {m.topRows(rank), std::move(pivots)};
}

template <typename S>
Index rank(const MatrixT<S>& m) {
  return static_cast<Index>(row_reduce<S>(m).pivots.size());
}

/// Basis of {v : m v = 0}, one vector per column.
template <typename S>
MatrixT<S> nullspace(const MatrixT<S>& m) {
  const Index n = m.cols();
  const EchelonT<S> e = row_reduce<S>(m);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  MatrixT<S> basis = MatrixT<S>::Zero(n, static_cast<Index>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const Index f = free_cols[k];
    basis(f, static_cast<Index>(k)) = S(1);
    for (size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], static_cast<Index>(k)) = -e.rows(static_cast<Index>(r), f);
  }
  return basis;
}

/// A row stored as (column, value) pairs, columns strictly increasing, no zeros.
template <typename S>
using SparseRowT = std::vector<std::pair<Index, S>>;

namespace detail {

// a - f b on sparse rows.
template <typename S>
SparseRowT<S> axpy(const SparseRowT<S>& a, const S& f, const SparseRowT<S>& b) {
  SparseRowT<S> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      S v = a[i].second - f * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// nullspace() for systems given as sparse rows; rows are folded in one at a
/// time, so long stacks of mostly redundant equations stay cheap.
template <typename S>
MatrixT<S> sparse_nullspace(const std::vector<SparseRowT<S>>& rows, Index ncols) {
  std::vector<SparseRowT<S>> pivot_row(static_cast<size_t>(ncols));
  std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
  for (SparseRowT<S> row : rows) {
    while (!row.empty()) {
      const Index lead = row.front().first;
      if (!is_pivot[static_cast<size_t>(lead)]) {
        const S inv = S(1) / row.front().second;
        for (auto& entry : row) entry.second *= inv;
        pivot_row[static_cast<size_t>(lead)] = std::move(row);
        is_pivot[static_cast<size_t>(lead)] = true;
        break;
      }
      const S f = row.front().second;
      row = detail::axpy(row, f, pivot_row[static_cast<size_t>(lead)]);
    }
  }
  // back substitution to reduced form, last pivot first
  for (Index c = ncols - 1; c >= 0; --c) {
    if (!is_pivot[static_cast<size_t>(c)]) continue;
    SparseRowT<S>& row = pivot_row[static_cast<size_t>(c)];
    for (size_t k = 1; k < row.size();) {
      const Index col = row[k].first;
      if (is_pivot[static_cast<size_t>(col)]) {
        const S f = row[k].second;
        row = detail::axpy(row, f, pivot_row[static_cast<size_t>(col)]);
      } else {
        ++k;
      }
    }
  }
  std::vector<Index> free_cols;
  std::vector<Index> slot(static_cast<size_t>(ncols), -1);
  for (Index c = 0; c < ncols; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) {
      slot[static_cast<size_t>(c)] = static_cast<Index>(free_cols.size());
      free_cols.push_back(c);
    }
  MatrixT<S> basis = MatrixT<S>::Zero(ncols, static_cast<Index>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) basis(free_cols[k], static_cast<Index>(k)) = S(1);
  for (Index c = 0; c < ncols; ++c) {
    if (!is_pivot[static_cast<size_t>(c)]) continue;
    for (const auto& [col, v] : pivot_row[static_cast<size_t>(c)])
      if (col != c) basis(c, slot[static_cast<size_t>(col)]) = -v;
  }
  return basis;
}

/// One solution of a x = b, or nullopt when the system is inconsistent.
template <typename S>
std::optional<VectorT<S>> solve(const MatrixT<S>& a, const VectorT<S>& b) {
  if (a.rows() != b.size()) fail(ErrorCode::DimMismatch, "solve: rhs length mismatch");
  MatrixT<S> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const EchelonT<S> e = row_reduce<S>(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  VectorT<S> x = VectorT<S>::Zero(a.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r)
    x(e.pivots[r]) = e.rows(static_cast<Index>(r), a.cols());
  return x;
}

/// Exact inverse, or nullopt for a singular matrix.
template <typename S>
std::optional<MatrixT<S>> inverse(const MatrixT<S>& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::DimMismatch, "inverse: matrix is not square");
  const Index n = a.rows();
  MatrixT<S> aug(n, 2 * n);
  aug << a, MatrixT<S>::Identity(n, n);
  const EchelonT<S> e = row_reduce<S>(std::move(aug));
  if (static_cast<Index>(e.pivots.size()) < n || (n > 0 && e.pivots[static_cast<size_t>(n - 1)] >= n))
    return std::nullopt;
  return MatrixT<S>(e.rows.rightCols(n));
}

/// A linear subspace of S^n kept in canonical form: the basis rows are the
/// nonzero rows of the reduced row echelon form, so two subspaces are equal
/// exactly when their basis matrices are equal.
template <typename S>
class SubspaceT {
 public:
  SubspaceT() : SubspaceT(0) {}
  explicit SubspaceT(Index ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `rows`.
  static SubspaceT span(Index ambient, const MatrixT<S>& rows) {
    if (rows.cols() != ambient)
      fail(ErrorCode::DimMismatch, "span: vectors of length " + std::to_string(rows.cols()) +
                                       " in ambient dimension " + std::to_string(ambient));
    SubspaceT s(ambient);
    EchelonT<S> e = row_reduce<S>(rows);
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static SubspaceT span(Index ambient, const std::vector<VectorT<S>>& vectors) {
    MatrixT<S> rows(static_cast<Index>(vectors.size()), ambient);
    for (size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) fail(ErrorCode::DimMismatch, "span: vector length mismatch");
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return span(ambient, rows);
  }

  /// Span of the columns of `cols` (e.g. the image of a linear map).
  static SubspaceT column_span(const MatrixT<S>& cols) {
    return span(cols.rows(), MatrixT<S>(cols.transpose()));
  }

  static SubspaceT full(Index ambient) {
    return span(ambient, MatrixT<S>(MatrixT<S>::Identity(ambient, ambient)));
  }

  /// Span of the standard basis vectors with the given indices.
  static SubspaceT coordinate(Index ambient, const std::vector<Index>& indices) {
    MatrixT<S> rows = MatrixT<S>::Zero(static_cast<Index>(indices.size()), ambient);
    for (size_t r = 0; r < indices.size(); ++r) rows(static_cast<Index>(r), indices[r]) = S(1);
    return span(ambient, rows);
  }

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const MatrixT<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  VectorT<S> basis_vector(Index r) const { return basis_.row(r).transpose(); }

  /// Coordinates of v in the canonical basis, or nullopt if v is not a member.
  std::optional<VectorT<S>> coordinates(const VectorT<S>& v) const {
    if (v.size() != ambient_) fail(ErrorCode::DimMismatch, "coordinates: vector length mismatch");
    VectorT<S> c(dim());
    for (Index r = 0; r < dim(); ++r) c(r) = v(pivots_[static_cast<size_t>(r)]);
    VectorT<S> back = basis_.transpose() * c;
    if (back != v) return std::nullopt;
    return c;
  }

  bool contains(const VectorT<S>& v) const { return coordinates(v).has_value(); }

  bool contains(const SubspaceT& other) const {
    check_same_ambient(other);
    for (Index r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_vector(r))) return false;
    return true;
  }

  /// dim x ambient matrix reading off coordinates of members (pivot entries).
  MatrixT<S> coordinate_map() const {
    MatrixT<S> m = MatrixT<S>::Zero(dim(), ambient_);
    for (Index r = 0; r < dim(); ++r) m(r, pivots_[static_cast<size_t>(r)]) = S(1);
    return m;
  }

  /// ambient x dim matrix sending coordinates to vectors.
  MatrixT<S> embedding() const { return basis_.transpose(); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  friend bool operator==(const SubspaceT& a, const SubspaceT& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

  void check_same_ambient(const SubspaceT& other) const {
    if (other.ambient_ != ambient_)
      fail(ErrorCode::DimMismatch, "subspaces of ambient dimension " + std::to_string(ambient_) +
                                       " and " + std::to_string(other.ambient_));
  }

 private:
  Index ambient_;
  MatrixT<S> basis_;
  std::vector<Index> pivots_;
};

template <typename S>
SubspaceT<S> sum(const SubspaceT<S>& u, const SubspaceT<S>& v) {
  u.check_same_ambient(v);
  MatrixT<S> rows(u.dim() + v.dim(), u.ambient());
  rows << u.basis(), v.basis();
  return SubspaceT<S>::span(u.ambient(), rows);
}

template <typename S>
SubspaceT<S> intersect(const SubspaceT<S>& u, const SubspaceT<S>& v) {
  u.check_same_ambient(v);
  // x = U^T a = V^T b  <=>  [U^T | -V^T] (a; b) = 0
  MatrixT<S> system(u.ambient(), u.dim() + v.dim());
  system << u.embedding(), -v.embedding();
  const MatrixT<S> null = nullspace<S>(system);
  const MatrixT<S> vectors = u.embedding() * null.topRows(u.dim());
  return SubspaceT<S>::column_span(vectors);
}

using Subspace = SubspaceT<Scalar>;
using Echelon = EchelonT<Scalar>;

}  // namespace gsm

#endif  // GSM_LINALG_HPP
