#include <gsm/error.hpp>
#include <gsm/smash.hpp>

namespace gsm {

namespace {
size_t sz(Index i) { return static_cast<size_t>(i); }
}  // namespace

Vector SmashAlgebra::idempotent(Index x) const {
  const Index e = action.object_of(x);
  const Vector& one = source.unit_of(e);
  Vector v = Vector::Zero(dim());
  for (Index i = 0; i < one.size(); ++i)
    if (!one(i).is_zero()) v(index_of(i, x)) = one(i);
  return v;
}

SmashAlgebra smash_product(const GradedAlgebra& ga, const GSetAction& action) {
  if (!action.split()) fail(ErrorCode::NotSplit, "the smash product needs a split action");
  if (!(ga.groupoid() == action.groupoid()))
    fail(ErrorCode::DimMismatch, "algebra and action are over different groupoids");
  const FiniteGroupoid& g = ga.groupoid();
  const StructureAlgebra& a = ga.algebra();
  const Index n = action.carrier_size();

  std::vector<SmashLabel> labels;
  std::vector<Index> lookup(sz(a.dim() * n), kNone);
  std::vector<std::string> names;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index x : action.fiber(g.dom(ga.deg(i)))) {
      lookup[sz(i * n + x)] = static_cast<Index>(labels.size());
      labels.push_back({i, x});
      names.push_back(a.basis_name(i) + "[" + action.point_name(x) + "]");
    }
  const Index dim = static_cast<Index>(labels.size());

  std::vector<std::vector<Term>> table(sz(dim * dim));
  for (Index p = 0; p < dim; ++p)
    for (Index q = 0; q < dim; ++q) {
      const auto [i, x] = labels[sz(p)];
      const auto [j, y] = labels[sz(q)];
      const Index gi = ga.deg(i), gj = ga.deg(j);
      if (g.dom(gi) != g.ran(gj) || action.apply(gj, y) != x) continue;
      for (const Term& t : a.terms(i, j)) table[sz(p * dim + q)].push_back({lookup[sz(t.index * n + y)], t.coeff});
    }

  Vector unit = Vector::Zero(dim);
  for (Index e = 0; e < g.object_count(); ++e)
    for (Index x : action.fiber(e))
      for (Index i = 0; i < a.dim(); ++i)
        if (!ga.unit_of(e)(i).is_zero()) unit(lookup[sz(i * n + x)]) += ga.unit_of(e)(i);

  return SmashAlgebra{ga, action, StructureAlgebra::validate(dim, std::move(table), unit, std::move(names)),
                      std::move(labels), std::move(lookup)};
}

AlgebraMap eta_embedding(const SmashAlgebra& s) {
  const GradedAlgebra& ga = s.source;
  Matrix m = Matrix::Zero(s.dim(), ga.dim());
  for (Index i = 0; i < ga.dim(); ++i)
    for (Index x : s.action.fiber(ga.groupoid().dom(ga.deg(i)))) m(s.index_of(i, x), i) = 1;
  const Verdict v = check_unital_homomorphism(ga.algebra(), s.algebra, m);
  if (!v) fail(ErrorCode::NotMultiplicative, "eta: " + v.witness);
  if (rank<Scalar>(m) != ga.dim()) fail(ErrorCode::NotMultiplicative, "eta is not injective");
  return {std::move(m)};
}

SmashBimodule bimodule_actions(const SmashAlgebra& s) {
  const GradedAlgebra& ga = s.source;
  const FiniteGroupoid& g = ga.groupoid();
  const Matrix eta = eta_embedding(s).matrix;
  std::vector<Matrix> left, right;
  for (Index i = 0; i < ga.dim(); ++i) {
    left.push_back(s.algebra.left_matrix(eta.col(i)));
    right.push_back(s.algebra.right_matrix(eta.col(i)));
  }

  Verdict identities = Verdict::yes();
  for (Index i = 0; i < ga.dim() && identities; ++i) {
    const Index d = ga.deg(i);
    for (Index x : s.action.fiber(g.dom(d))) {
      const Vector lhs = unit_vector(s.dim(), s.index_of(i, x));
      if (s.algebra.multiply(eta.col(i), s.idempotent(x)) != lhs) {
        identities = Verdict::no("eta(" + ga.algebra().basis_name(i) + ") 1 delta_" + s.action.point_name(x) +
                                 " != " + s.algebra.basis_name(s.index_of(i, x)));
        break;
      }
    }
    for (Index x : s.action.fiber(g.ran(d))) {
      if (!identities) break;
      const Index back = s.action.apply(g.inverse(d), x);
      const Vector rhs = unit_vector(s.dim(), s.index_of(i, back));
      if (s.algebra.multiply(s.idempotent(x), eta.col(i)) != rhs)
        identities = Verdict::no("1 delta_" + s.action.point_name(x) + " eta(" + ga.algebra().basis_name(i) +
                                 ") != " + s.algebra.basis_name(s.index_of(i, back)));
    }
  }

  Verdict mixed = Verdict::yes();
  for (Index i = 0; i < ga.dim() && mixed; ++i)
    for (Index j = 0; j < ga.dim(); ++j)
      if (left[sz(i)] * right[sz(j)] != right[sz(j)] * left[sz(i)]) {
        mixed = Verdict::no("(" + ga.algebra().basis_name(i) + " m) " + ga.algebra().basis_name(j) + " != " +
                            ga.algebra().basis_name(i) + " (m " + ga.algebra().basis_name(j) + ")");
        break;
      }

  return {ModuleRep::validate(ga.algebra(), std::move(left), Side::Left),
          ModuleRep::validate(ga.algebra(), std::move(right), Side::Right), std::move(identities), std::move(mixed)};
}

InducedMorphism induced_morphism(const GSetMorphism& phi, const GradedAlgebra& ga) {
  const MorphismClass c = check_morphism(phi.map, phi.source, phi.target);
  if (!c.is_morphism()) fail(ErrorCode::NotMorphism, c.witness);
  SmashAlgebra sx = smash_product(ga, phi.source);
  SmashAlgebra sz_ = smash_product(ga, phi.target);
  Matrix m = Matrix::Zero(sx.dim(), sz_.dim());
  for (Index col = 0; col < sz_.dim(); ++col) {
    const auto [i, z] = sz_.labels[sz(col)];
    for (Index x : sx.action.fiber(ga.groupoid().dom(ga.deg(i))))
      if (phi.map[sz(x)] == z) m(sx.index_of(i, x), col) = 1;
  }
  const Verdict v = check_unital_homomorphism(sz_.algebra, sx.algebra, m);
  if (!v) fail(ErrorCode::NotMultiplicative, "phi*: " + v.witness);

  InducedMorphism out{std::move(sz_), std::move(sx), {std::move(m)}, 0, false, false, false};
  out.rank = rank<Scalar>(out.map.matrix);
  out.injective = out.rank == out.source.dim();
  out.surjective = out.rank == out.target.dim();
  out.contract_ok = (!c.injective() || out.surjective) && (!c.surjective() || out.injective);
  return out;
}

}  // namespace gsm
