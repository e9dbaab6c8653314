#include "oracles.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <sstream>

namespace oracle {

namespace {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

size_t at(Index n, Index i, Index j, Index k) { return static_cast<size_t>((i * n + j) * n + k); }

Index find(std::vector<Index>& parent, Index a) {
  while (parent[static_cast<size_t>(a)] != a) a = parent[static_cast<size_t>(a)];
  return a;
}

}  // namespace

std::vector<Scalar> dense_constants(const StructureAlgebra& a) {
  const Index n = a.dim();
  std::vector<Scalar> c(static_cast<size_t>(n * n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const Term& t : a.terms(i, j)) c[at(n, i, j, t.index)] += t.coeff;
  return c;
}

Result associative_unital(const StructureAlgebra& a) {
  const Index n = a.dim();
  const std::vector<Scalar> c = dense_constants(a);
  std::vector<Scalar> lhs(static_cast<size_t>(n)), rhs(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), Scalar(0));
        std::fill(rhs.begin(), rhs.end(), Scalar(0));
        for (Index m = 0; m < n; ++m) {
          const Scalar& ij = c[at(n, i, j, m)];
          if (!ij.is_zero())
            for (Index l = 0; l < n; ++l) lhs[static_cast<size_t>(l)] += ij * c[at(n, m, k, l)];
          const Scalar& jk = c[at(n, j, k, m)];
          if (!jk.is_zero())
            for (Index l = 0; l < n; ++l) rhs[static_cast<size_t>(l)] += jk * c[at(n, i, m, l)];
        }
        if (lhs != rhs) {
          std::ostringstream w;
          w << "(b" << i << " b" << j << ") b" << k << " != b" << i << " (b" << j << " b" << k << ")";
          return {false, w.str()};
        }
      }
  if (!a.unital()) return {};
  const Vector& u = a.unit();
  for (Index b = 0; b < n; ++b)
    for (Index l = 0; l < n; ++l) {
      Scalar left = 0, right = 0;
      for (Index m = 0; m < n; ++m) {
        left += u(m) * c[at(n, m, b, l)];
        right += u(m) * c[at(n, b, m, l)];
      }
      const Scalar expect = l == b ? 1 : 0;
      if (left != expect || right != expect) return {false, "unit fails on b" + std::to_string(b)};
    }
  return {};
}

Result multiplicative(const StructureAlgebra& src, const StructureAlgebra& dst, const Matrix& f) {
  const Index n = src.dim(), d = dst.dim();
  if (f.rows() != d || f.cols() != n) return {false, "shape"};
  const std::vector<Scalar> cs = dense_constants(src), cd = dense_constants(dst);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vector lhs = Vector::Zero(d);
      for (Index m = 0; m < n; ++m)
        if (!cs[at(n, i, j, m)].is_zero()) lhs += cs[at(n, i, j, m)] * f.col(m);
      Vector rhs = Vector::Zero(d);
      for (Index p = 0; p < d; ++p) {
        if (f(p, i).is_zero()) continue;
        for (Index q = 0; q < d; ++q) {
          if (f(q, j).is_zero()) continue;
          const Scalar w = f(p, i) * f(q, j);
          for (Index l = 0; l < d; ++l) rhs(l) += w * cd[at(d, p, q, l)];
        }
      }
      if (lhs != rhs) return {false, "f(b" + std::to_string(i) + " b" + std::to_string(j) + ")"};
    }
  return {};
}

Index integer_rank(const Matrix& m) {
  const Index cols = m.cols();
  std::vector<std::vector<Int>> rows;
  for (Index r = 0; r < m.rows(); ++r) {
    Int scale = 1;
    bool nonzero = false;
    for (Index c = 0; c < cols; ++c)
      if (!m(r, c).is_zero()) {
        nonzero = true;
        scale = boost::multiprecision::lcm(scale, Int(boost::multiprecision::denominator(m(r, c))));
      }
    if (!nonzero) continue;
    std::vector<Int> row(static_cast<size_t>(cols));
    for (Index c = 0; c < cols; ++c) {
      const Rational q = m(r, c) * Rational(scale);
      row[static_cast<size_t>(c)] = boost::multiprecision::numerator(q);
    }
    rows.push_back(std::move(row));
  }

  Index rank = 0;
  for (Index c = 0; c < cols && rank < static_cast<Index>(rows.size()); ++c) {
    size_t pivot = static_cast<size_t>(rank);
    while (pivot < rows.size() && rows[pivot][static_cast<size_t>(c)] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<size_t>(rank)]);
    const std::vector<Int>& p = rows[static_cast<size_t>(rank)];
    for (size_t r = static_cast<size_t>(rank) + 1; r < rows.size(); ++r) {
      const Int a = rows[r][static_cast<size_t>(c)];
      if (a == 0) continue;
      const Int pc = p[static_cast<size_t>(c)];
      Int content = 0;
      for (Index k = c; k < cols; ++k) {
        Int& v = rows[r][static_cast<size_t>(k)];
        v = pc * v - a * p[static_cast<size_t>(k)];
        content = boost::multiprecision::gcd(content, v);
      }
      if (content > 1)
        for (Index k = c; k < cols; ++k) rows[r][static_cast<size_t>(k)] /= content;
    }
    ++rank;
  }
  return rank;
}

Index commutant_dim(const std::vector<Matrix>& ops) {
  if (ops.empty()) return 0;
  const Index n = ops.front().rows();
  const Index unknowns = n * n;  // T(i, l) at l * n + i
  Matrix system = Matrix::Zero(static_cast<Index>(ops.size()) * unknowns, unknowns);
  Index row = 0;
  for (const Matrix& r : ops)
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i, ++row)
        for (Index l = 0; l < n; ++l) {
          // (T R - R T)(i, j)
          system(row, l * n + i) += r(l, j);
          system(row, j * n + l) -= r(i, l);
        }
  return unknowns - integer_rank(system);
}

Matrix right_multiplication(const std::vector<Scalar>& c, Index dim, const Vector& v) {
  Matrix m = Matrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      if (v(j).is_zero()) continue;
      for (Index k = 0; k < dim; ++k) m(k, i) += v(j) * c[at(dim, i, j, k)];
    }
  return m;
}

Subspace orbit_constant_invariants(const BiSet& biset, const SmashAlgebra& s) {
  const GSetAction& k = biset.k_action();
  const Index n = k.carrier_size();
  std::vector<Index> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  for (Index m = 0; m < k.groupoid().size(); ++m)
    for (Index x : k.fiber(k.groupoid().dom(m)))
      parent[static_cast<size_t>(find(parent, x))] = find(parent, k.apply(m, x));

  std::vector<Vector> vectors;
  for (Index a = 0; a < s.source.dim(); ++a)
    for (Index root = 0; root < n; ++root) {
      Vector v = Vector::Zero(s.dim());
      bool any = false;
      for (Index l = 0; l < s.dim(); ++l)
        if (s.labels[static_cast<size_t>(l)].a == a && find(parent, s.labels[static_cast<size_t>(l)].x) == root) {
          v(l) = 1;
          any = true;
        }
      if (any) vectors.push_back(v);
    }
  return Subspace::span(s.dim(), vectors);
}

Index skew_dim_by_count(const BiSet& biset, const SmashAlgebra& s) {
  const GSetAction& k = biset.k_action();
  Index count = 0;
  for (Index m = 0; m < k.groupoid().size(); ++m)
    for (const SmashLabel& l : s.labels)
      if (k.in_fiber(k.groupoid().ran(m), l.x)) ++count;
  return count;
}

Index end_dim(const BiSet& biset, const SmashAlgebra& s) {
  const std::vector<Scalar> c = dense_constants(s.algebra);
  const Subspace b = orbit_constant_invariants(biset, s);
  std::vector<Matrix> ops;
  for (Index r = 0; r < b.dim(); ++r) ops.push_back(right_multiplication(c, s.dim(), b.basis_vector(r)));
  return commutant_dim(ops);
}

}  // namespace oracle
