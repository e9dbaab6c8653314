#include <gsm/algebra.hpp>
#include <gsm/error.hpp>

#include <algorithm>
#include <map>
#include <tuple>

namespace gsm {

namespace {

size_t sz(Index i) { return static_cast<size_t>(i); }

std::string triple(const StructureAlgebra& a, Index i, Index j, Index l) {
  return "(" + a.basis_name(i) + ", " + a.basis_name(j) + ", " + a.basis_name(l) + ")";
}

Vector apply_terms(const std::vector<Term>& terms, Index dim, const Scalar& scale) {
  Vector v = Vector::Zero(dim);
  for (const Term& t : terms) v(t.index) += scale * t.coeff;
  return v;
}

}  // namespace

StructureAlgebra StructureAlgebra::validate(Index dim, std::vector<std::vector<Term>> products,
                                            std::optional<Vector> unit, std::vector<std::string> basis_names) {
  if (dim < 0) fail(ErrorCode::Malformed, "negative dimension");
  if (static_cast<Index>(products.size()) != dim * dim)
    fail(ErrorCode::Malformed, "expected dim^2 product entries, got " + std::to_string(products.size()));
  if (basis_names.empty())
    for (Index i = 0; i < dim; ++i) basis_names.push_back("b" + std::to_string(i));
  if (static_cast<Index>(basis_names.size()) != dim) fail(ErrorCode::Malformed, "wrong number of basis names");
  if (unit && unit->size() != dim) fail(ErrorCode::Malformed, "unit has the wrong length");

  StructureAlgebra a;
  a.dim_ = dim;
  a.names_ = std::move(basis_names);
  for (auto& entry : products) {
    std::map<Index, Scalar> merged;
    for (const Term& t : entry) {
      if (t.index < 0 || t.index >= dim) fail(ErrorCode::Malformed, "structure constant index out of range");
      merged[t.index] += t.coeff;
    }
    std::vector<Term> clean;
    for (auto& [k, c] : merged)
      if (!c.is_zero()) clean.push_back({k, c});
    a.table_.push_back(std::move(clean));
  }

  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      for (Index l = 0; l < dim; ++l) {
        Vector lhs = Vector::Zero(dim);
        for (const Term& t : a.terms(i, j))
          for (const Term& s : a.terms(t.index, l)) lhs(s.index) += t.coeff * s.coeff;
        Vector rhs = Vector::Zero(dim);
        for (const Term& t : a.terms(j, l))
          for (const Term& s : a.terms(i, t.index)) rhs(s.index) += t.coeff * s.coeff;
        if (lhs != rhs)
          fail(ErrorCode::Assoc, "(b_i b_j) b_l != b_i (b_j b_l) at " + triple(a, i, j, l) + ": " +
                                     format_element(a, lhs) + " vs " + format_element(a, rhs));
      }
    }

  if (unit) {
    for (Index i = 0; i < dim; ++i) {
      const Vector e = unit_vector(dim, i);
      if (a.multiply(*unit, e) != e)
        fail(ErrorCode::Unit, "1 " + a.names_[sz(i)] + " = " + format_element(a, a.multiply(*unit, e)));
      if (a.multiply(e, *unit) != e)
        fail(ErrorCode::Unit, a.names_[sz(i)] + " 1 = " + format_element(a, a.multiply(e, *unit)));
    }
  }
  a.unit_ = std::move(unit);
  return a;
}

Vector StructureAlgebra::basis_product(Index i, Index j) const { return apply_terms(terms(i, j), dim_, Scalar(1)); }

Vector StructureAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out = Vector::Zero(dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (a(i).is_zero()) continue;
    for (Index j = 0; j < dim_; ++j) {
      if (b(j).is_zero()) continue;
      const Scalar c = a(i) * b(j);
      for (const Term& t : terms(i, j)) out(t.index) += c * t.coeff;
    }
  }
  return out;
}

Matrix StructureAlgebra::left_matrix(const Vector& a) const {
  Matrix m = Matrix::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (a(i).is_zero()) continue;
    for (Index j = 0; j < dim_; ++j)
      for (const Term& t : terms(i, j)) m(t.index, j) += a(i) * t.coeff;
  }
  return m;
}

Matrix StructureAlgebra::right_matrix(const Vector& a) const {
  Matrix m = Matrix::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (a(i).is_zero()) continue;
    for (Index j = 0; j < dim_; ++j)
      for (const Term& t : terms(j, i)) m(t.index, j) += a(i) * t.coeff;
  }
  return m;
}

const Vector& StructureAlgebra::unit() const {
  if (!unit_) fail(ErrorCode::Unit, "algebra has no unit");
  return *unit_;
}

Index StructureAlgebra::find_basis(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? kNone : static_cast<Index>(it - names_.begin());
}

bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (a.dim_ != b.dim_ || a.unit_.has_value() != b.unit_.has_value()) return false;
  if (a.unit_ && *a.unit_ != *b.unit_) return false;
  for (size_t n = 0; n < a.table_.size(); ++n) {
    const auto& x = a.table_[n];
    const auto& y = b.table_[n];
    if (x.size() != y.size()) return false;
    for (size_t t = 0; t < x.size(); ++t)
      if (x[t].index != y[t].index || x[t].coeff != y[t].coeff) return false;
  }
  return true;
}

std::string format_element(const StructureAlgebra& alg, const Vector& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (v(i) != 1) s += to_string(v(i)) + " ";
    s += i < alg.dim() ? alg.basis_name(i) : "b" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::optional<Vector> find_unit(const StructureAlgebra& alg) {
  const Index n = alg.dim();
  Matrix lhs = Matrix::Zero(2 * n * n, n);
  Vector rhs = Vector::Zero(2 * n * n);
  for (Index s = 0; s < n; ++s)
    for (Index r = 0; r < n; ++r) {
      for (const Term& t : alg.terms(r, s)) lhs(s * n + t.index, r) += t.coeff;
      for (const Term& t : alg.terms(s, r)) lhs(n * n + s * n + t.index, r) += t.coeff;
    }
  for (Index s = 0; s < n; ++s) {
    rhs(s * n + s) = 1;
    rhs(n * n + s * n + s) = 1;
  }
  return solve<Scalar>(lhs, rhs);
}

StructureAlgebra induced_subalgebra(const StructureAlgebra& alg, const Subspace& u) {
  if (u.ambient() != alg.dim()) fail(ErrorCode::DimMismatch, "subspace ambient differs from algebra dimension");
  const Index d = u.dim();
  std::vector<std::vector<Term>> table(sz(d * d));
  for (Index r = 0; r < d; ++r)
    for (Index s = 0; s < d; ++s) {
      const Vector p = alg.multiply(u.basis_vector(r), u.basis_vector(s));
      const auto c = u.coordinates(p);
      if (!c)
        fail(ErrorCode::NotClosed, "product " + format_element(alg, u.basis_vector(r)) + " * " +
                                       format_element(alg, u.basis_vector(s)) + " leaves the subspace");
      for (Index k = 0; k < d; ++k)
        if (!(*c)(k).is_zero()) table[sz(r * d + s)].push_back({k, (*c)(k)});
    }
  std::vector<std::string> names;
  for (Index r = 0; r < d; ++r) names.push_back("u" + std::to_string(r));
  StructureAlgebra bare = StructureAlgebra::validate(d, table, std::nullopt, names);
  return StructureAlgebra::validate(d, std::move(table), find_unit(bare), std::move(names));
}

Subspace product_span(const StructureAlgebra& alg, const Subspace& u, const Subspace& v) {
  u.check_same_ambient(v);
  if (u.ambient() != alg.dim()) fail(ErrorCode::DimMismatch, "subspace ambient differs from algebra dimension");
  std::vector<Vector> products;
  for (Index r = 0; r < u.dim(); ++r)
    for (Index s = 0; s < v.dim(); ++s) products.push_back(alg.multiply(u.basis_vector(r), v.basis_vector(s)));
  return Subspace::span(alg.dim(), products);
}

Verdict is_ideal(const StructureAlgebra& alg, const Subspace& u) {
  for (Index r = 0; r < u.dim(); ++r)
    for (Index i = 0; i < alg.dim(); ++i) {
      const Vector e = unit_vector(alg.dim(), i);
      const Vector x = u.basis_vector(r);
      if (!u.contains(alg.multiply(e, x)))
        return Verdict::no(alg.basis_name(i) + " * (" + format_element(alg, x) + ") leaves the subspace");
      if (!u.contains(alg.multiply(x, e)))
        return Verdict::no("(" + format_element(alg, x) + ") * " + alg.basis_name(i) + " leaves the subspace");
    }
  return Verdict::yes();
}

Verdict check_multiplicative(const StructureAlgebra& src, const StructureAlgebra& dst, const Matrix& map) {
  if (map.rows() != dst.dim() || map.cols() != src.dim()) return Verdict::no("map has the wrong shape");
  for (Index i = 0; i < src.dim(); ++i)
    for (Index j = 0; j < src.dim(); ++j) {
      const Vector lhs = map * src.basis_product(i, j);
      const Vector rhs = dst.multiply(map.col(i), map.col(j));
      if (lhs != rhs)
        return Verdict::no("f(" + src.basis_name(i) + " " + src.basis_name(j) + ") = " + format_element(dst, lhs) +
                           " but f(" + src.basis_name(i) + ") f(" + src.basis_name(j) + ") = " +
                           format_element(dst, rhs));
    }
  return Verdict::yes();
}

Verdict check_unital_homomorphism(const StructureAlgebra& src, const StructureAlgebra& dst, const Matrix& map) {
  Verdict v = check_multiplicative(src, dst, map);
  if (!v) return v;
  const Vector image = map * src.unit();
  if (image != dst.unit()) return Verdict::no("f(1) = " + format_element(dst, image) + " is not the unit");
  return Verdict::yes();
}

namespace {

void check_homogeneous_units(const StructureAlgebra& alg, const FiniteGroupoid& g, const std::vector<Index>& deg,
                             const std::vector<Vector>& units) {
  for (Index i = 0; i < alg.dim(); ++i) {
    const Vector b = unit_vector(alg.dim(), i);
    const Index d = deg[sz(i)];
    if (alg.multiply(units[sz(g.ran(d))], b) != b)
      fail(ErrorCode::UnitDecomp, "1_" + g.object_name(g.ran(d)) + " does not fix " + alg.basis_name(i) + " on the left");
    if (alg.multiply(b, units[sz(g.dom(d))]) != b)
      fail(ErrorCode::UnitDecomp, "1_" + g.object_name(g.dom(d)) + " does not fix " + alg.basis_name(i) + " on the right");
  }
  Vector total = Vector::Zero(alg.dim());
  for (const Vector& u : units) total += u;
  if (total != alg.unit()) fail(ErrorCode::UnitDecomp, "the homogeneous units do not sum to 1");
}

}  // namespace

GradedAlgebra GradedAlgebra::validate(StructureAlgebra alg, FiniteGroupoid g, std::vector<Index> deg) {
  const Index n = alg.dim();
  if (static_cast<Index>(deg.size()) != n) fail(ErrorCode::Malformed, "one degree per basis element expected");
  for (Index d : deg)
    if (d < 0 || d >= g.size()) fail(ErrorCode::Malformed, "degree is not a morphism");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Index gh = g.compose(deg[sz(i)], deg[sz(j)]);
      for (const Term& t : alg.terms(i, j)) {
        if (gh == kNone)
          fail(ErrorCode::Grading, "(" + alg.basis_name(i) + ", " + alg.basis_name(j) + ", " +
                                       alg.basis_name(t.index) + "): degrees " + g.morphism_name(deg[sz(i)]) +
                                       " and " + g.morphism_name(deg[sz(j)]) + " are not composable");
        if (deg[sz(t.index)] != gh)
          fail(ErrorCode::Grading, "(" + alg.basis_name(i) + ", " + alg.basis_name(j) + ", " +
                                       alg.basis_name(t.index) + "): term of degree " +
                                       g.morphism_name(deg[sz(t.index)]) + " in a product of degree " +
                                       g.morphism_name(gh));
      }
    }
  if (!alg.unital()) fail(ErrorCode::UnitDecomp, "graded algebras must be unital");
  std::vector<Vector> units(sz(g.object_count()), Vector::Zero(n));
  const Vector& one = alg.unit();
  for (Index i = 0; i < n; ++i) {
    if (one(i).is_zero()) continue;
    const Index d = deg[sz(i)];
    if (!g.is_identity(d))
      fail(ErrorCode::UnitDecomp, "the unit has a component " + alg.basis_name(i) + " of non-identity degree " +
                                      g.morphism_name(d));
    units[sz(g.dom(d))](i) = one(i);
  }
  check_homogeneous_units(alg, g, deg, units);

  GradedAlgebra ga(std::move(alg), std::move(g));
  ga.components_.assign(sz(ga.g_.size()), {});
  for (Index i = 0; i < n; ++i) ga.components_[sz(deg[sz(i)])].push_back(i);
  ga.deg_ = std::move(deg);
  ga.units_ = std::move(units);
  return ga;
}

Subspace GradedAlgebra::component_space(Index g) const { return Subspace::coordinate(dim(), component(g)); }

std::vector<Vector> homogeneous_units(const GradedAlgebra& ga) {
  std::vector<Vector> units;
  for (Index e = 0; e < ga.groupoid().object_count(); ++e) units.push_back(ga.unit_of(e));
  check_homogeneous_units(ga.algebra(), ga.groupoid(), ga.degrees(), units);
  return units;
}

GradedAlgebra groupoid_algebra(const FiniteGroupoid& g) {
  const Index n = g.size();
  std::vector<std::vector<Term>> table(sz(n * n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = g.compose(a, b);
      if (ab != kNone) table[sz(a * n + b)].push_back({ab, Scalar(1)});
    }
  Vector unit = Vector::Zero(n);
  for (Index e = 0; e < g.object_count(); ++e) unit(g.identity(e)) = 1;
  std::vector<Index> deg(sz(n));
  for (Index a = 0; a < n; ++a) deg[sz(a)] = a;
  return GradedAlgebra::validate(StructureAlgebra::validate(n, std::move(table), unit, g.tables().morphism_names), g,
                                 std::move(deg));
}

DualGroupoidAlgebra dual_groupoid_algebra(const FiniteGroupoid& g) {
  const Index n = g.size();
  std::vector<std::vector<Term>> table(sz(n * n));
  for (Index a = 0; a < n; ++a) table[sz(a * n + a)].push_back({a, Scalar(1)});
  std::vector<std::string> names;
  for (Index a = 0; a < n; ++a) names.push_back("v_" + g.morphism_name(a));
  DualGroupoidAlgebra d{g, StructureAlgebra::validate(n, std::move(table), Vector::Ones(n), std::move(names)), {}, {}, {}};
  for (Index a = 0; a < n; ++a) {
    std::vector<std::pair<Index, Index>> terms;
    for (Index h : g.morphisms_from(g.dom(a))) terms.emplace_back(g.compose(a, g.inverse(h)), h);
    d.coproduct.push_back(std::move(terms));
    d.counit.push_back(Scalar(g.is_identity(a) ? 1 : 0));
    d.antipode.push_back(g.inverse(a));
  }
  return d;
}

Verdict check_dual_identities(const DualGroupoidAlgebra& d) {
  const FiniteGroupoid& g = d.groupoid;
  using Triple = std::tuple<Index, Index, Index>;
  using Pair = std::pair<Index, Index>;
  for (Index a = 0; a < g.size(); ++a) {
    if ((d.counit[sz(a)] == 1) != g.is_identity(a)) return Verdict::no("counit wrong at v_" + g.morphism_name(a));
    if (d.antipode[sz(d.antipode[sz(a)])] != a) return Verdict::no("S o S moves v_" + g.morphism_name(a));

    std::map<Triple, Scalar> left, right;
    for (auto [x, y] : d.coproduct[sz(a)]) {
      for (auto [p, q] : d.coproduct[sz(x)]) left[{p, q, y}] += 1;
      for (auto [p, q] : d.coproduct[sz(y)]) right[{x, p, q}] += 1;
    }
    if (left != right) return Verdict::no("coassociativity fails at v_" + g.morphism_name(a));

    for (Index b = 0; b < g.size(); ++b) {
      std::map<Pair, Scalar> lhs, rhs;
      if (a == b)
        for (const Pair& t : d.coproduct[sz(a)]) lhs[t] += 1;
      for (const Pair& s : d.coproduct[sz(a)])
        for (const Pair& t : d.coproduct[sz(b)])
          if (s == t) rhs[s] += 1;
      if (lhs != rhs)
        return Verdict::no("Delta(v_" + g.morphism_name(a) + " v_" + g.morphism_name(b) + ") != Delta(v_" +
                           g.morphism_name(a) + ") Delta(v_" + g.morphism_name(b) + ")");
    }
  }
  return Verdict::yes();
}

ModuleRep ModuleRep::validate(StructureAlgebra alg, std::vector<Matrix> act, Side side) {
  const Index n = alg.dim();
  if (static_cast<Index>(act.size()) != n) fail(ErrorCode::Module, "one action matrix per basis element expected");
  const Index m = act.empty() ? 0 : act.front().rows();
  for (const Matrix& a : act)
    if (a.rows() != m || a.cols() != m) fail(ErrorCode::Module, "action matrices must be square of one size");
  ModuleRep rep(std::move(alg), side);
  rep.dim_ = m;
  rep.act_ = std::move(act);
  const StructureAlgebra& a = rep.alg_;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Matrix lhs = rep.act_vector(a.basis_product(i, j));
      const Matrix rhs = side == Side::Left ? Matrix(rep.act_[sz(i)] * rep.act_[sz(j)])
                                            : Matrix(rep.act_[sz(j)] * rep.act_[sz(i)]);
      if (lhs != rhs)
        fail(ErrorCode::Module, "action is not multiplicative at (" + a.basis_name(i) + ", " + a.basis_name(j) + ")");
    }
  if (a.unital() && rep.act_vector(a.unit()) != Matrix::Identity(m, m))
    fail(ErrorCode::Module, "the unit does not act as the identity");
  return rep;
}

Matrix ModuleRep::act_vector(const Vector& a) const {
  Matrix out = Matrix::Zero(dim_, dim_);
  for (Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) out += a(i) * act_[sz(i)];
  return out;
}

ModuleRep regular_module(const StructureAlgebra& alg, Side side) {
  std::vector<Matrix> act;
  for (Index i = 0; i < alg.dim(); ++i) {
    const Vector e = unit_vector(alg.dim(), i);
    act.push_back(side == Side::Left ? alg.left_matrix(e) : alg.right_matrix(e));
  }
  return ModuleRep::validate(alg, std::move(act), side);
}

}  // namespace gsm
