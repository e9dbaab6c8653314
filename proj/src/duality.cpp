#include <gsm/duality.hpp>
#include <gsm/error.hpp>

#include <algorithm>
#include <map>

namespace gsm {

namespace {

size_t sz(Index i) { return static_cast<size_t>(i); }

Vector flatten(const Matrix& m) {
  Vector v(m.size());
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r) v(r + c * m.rows()) = m(r, c);
  return v;
}

Matrix unflatten(const Vector& v, Index n) {
  Matrix m(n, n);
  for (Index c = 0; c < n; ++c)
    for (Index r = 0; r < n; ++r) m(r, c) = v(r + c * n);
  return m;
}

std::vector<std::vector<Index>> sorted_blocks(std::vector<std::vector<Index>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

std::optional<Vector> EndomorphismAlgebra::coordinates(const Matrix& op) const {
  return flat_span.coordinates(flatten(op));
}

EndomorphismAlgebra endomorphism_algebra(const ModuleRep& m) {
  if (m.side() != Side::Right) fail(ErrorCode::Module, "End is computed for right modules");
  const Index n = m.dim();
  const Index blocks = m.algebra().dim();
  // one equation per entry (i, j) of T R - R T, unknown T(p, q) at p + q n
  std::vector<SparseRowT<Scalar>> equations;
  std::map<Index, Scalar> row;
  for (Index b = 0; b < blocks; ++b) {
    const Matrix& r = m.act(b);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) {
        row.clear();
        for (Index q = 0; q < n; ++q)
          if (!r(q, j).is_zero()) row[i + q * n] += r(q, j);
        for (Index p = 0; p < n; ++p)
          if (!r(i, p).is_zero()) row[p + j * n] -= r(i, p);
        SparseRowT<Scalar> eq;
        for (auto& [col, v] : row)
          if (!v.is_zero()) eq.emplace_back(col, v);
        if (!eq.empty()) equations.push_back(std::move(eq));
      }
  }
  const Subspace flat = Subspace::column_span(sparse_nullspace<Scalar>(equations, n * n));
  std::vector<Matrix> basis;
  for (Index r = 0; r < flat.dim(); ++r) basis.push_back(unflatten(flat.basis_vector(r), n));

  // The basis operators are sparse; multiply and read coordinates entrywise.
  const Index d = flat.dim();
  struct Entry {
    Index row, col;
    Scalar v;
  };
  std::vector<std::vector<Entry>> by_row(sz(d));  // nonzeros of each operator, row-major
  std::vector<std::vector<std::pair<Index, Scalar>>> flat_nz(sz(d));
  for (Index s = 0; s < d; ++s) {
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c)
        if (!basis[sz(s)](r, c).is_zero()) by_row[sz(s)].push_back({r, c, basis[sz(s)](r, c)});
    for (Index k = 0; k < n * n; ++k)
      if (!flat.basis()(s, k).is_zero()) flat_nz[sz(s)].emplace_back(k, flat.basis()(s, k));
  }
  std::vector<std::vector<size_t>> row_start(sz(d), std::vector<size_t>(sz(n + 1)));
  for (Index s = 0; s < d; ++s) {
    const auto& e = by_row[sz(s)];
    size_t at = 0;
    for (Index r = 0; r <= n; ++r) {
      while (at < e.size() && e[at].row < r) ++at;
      row_start[sz(s)][sz(r)] = at;
    }
  }

  std::vector<std::vector<Term>> table(sz(d * d));
  Vector product(n * n), back(n * n);
  for (Index s = 0; s < d; ++s)
    for (Index t = 0; t < d; ++t) {
      product.setZero();
      for (const Entry& a : by_row[sz(s)])
        for (size_t k = row_start[sz(t)][sz(a.col)]; k < row_start[sz(t)][sz(a.col + 1)]; ++k) {
          const Entry& b = by_row[sz(t)][k];
          product(a.row + b.col * n) += a.v * b.v;
        }
      back.setZero();
      for (Index k = 0; k < d; ++k) {
        const Scalar c = product(flat.pivots()[sz(k)]);
        if (c.is_zero()) continue;
        table[sz(s * d + t)].push_back({k, c});
        for (const auto& [idx, v] : flat_nz[sz(k)]) back(idx) += c * v;
      }
      if (back != product) fail(ErrorCode::Module, "End is not closed under composition");
    }
  const auto unit = flat.coordinates(flatten(Matrix::Identity(n, n)));
  if (!unit) fail(ErrorCode::Module, "the identity operator is not an endomorphism");
  std::vector<std::string> names;
  for (Index s = 0; s < d; ++s) names.push_back("T" + std::to_string(s));
  return {StructureAlgebra::validate(d, std::move(table), unit, std::move(names)), std::move(basis), flat};
}

ModuleRep right_module_over(const StructureAlgebra& s, const Subspace& b) {
  std::vector<Matrix> act;
  for (Index r = 0; r < b.dim(); ++r) act.push_back(s.right_matrix(b.basis_vector(r)));
  return ModuleRep::validate(induced_subalgebra(s, b), std::move(act), Side::Right);
}

GaloisMap canonical_galois_map(const AlgebraAction& act, const SkewRing& skew, const EndomorphismAlgebra& end) {
  const StructureAlgebra& s = act.algebra;
  const FiniteGroupoid& k = act.groupoid;
  Matrix map = Matrix::Zero(end.algebra.dim(), skew.dim());
  std::vector<Matrix> tail;
  for (Index m = 0; m < k.size(); ++m) tail.push_back(act.ambient_iso(m) * s.right_matrix(act.unit_of(k.dom(m))));
  for (Index q = 0; q < skew.dim(); ++q) {
    const SkewLabel l = skew.labels[sz(q)];
    const Vector x = act.ideal(l.k).basis_vector(l.r);
    const Matrix op = s.left_matrix(x) * tail[sz(l.k)];
    const auto c = end.coordinates(op);
    if (!c) fail(ErrorCode::NotEndo, "image of " + skew.algebra.basis_name(q) + " is not B-linear");
    map.col(q) = *c;
  }
  const Verdict v = check_multiplicative(skew.algebra, end.algebra, map);
  if (!v) fail(ErrorCode::NotMultiplicative, v.witness);
  GaloisMap out{{map}, rank<Scalar>(map), false};
  out.bijective = out.rank == skew.dim() && out.rank == end.algebra.dim();
  return out;
}

DualityReport verify_duality(const BiSet& biset, const GradedAlgebra& ga) {
  DualityReport r;
  const Verdict ff = is_fully_faithful(biset.k_action());
  r.fully_faithful = ff.ok;
  r.fully_faithful_witness = ff.witness;
  if (!ff) r.details.push_back("not fully faithful: " + ff.witness);

  const GammaAction gamma = gamma_action(biset, ga);
  const SmashAlgebra& s = gamma.smash;
  r.smash_dim = s.dim();
  const SkewRing skew = skew_groupoid_ring(gamma.action);
  r.skew_dim = skew.dim();
  const Invariants inv = invariant_subalgebra(gamma.action);
  r.invariant_dim = inv.space.dim();

  const FixedOrbitReport fo = fixed_vs_orbit_image(biset, ga);
  r.fixed_equals_image = fo.equal;
  if (!fo.equal)
    r.details.push_back("invariants (dim " + std::to_string(fo.invariant_dim) + ") differ from the orbit image (dim " +
                        std::to_string(fo.image_dim) + ")");

  const EndomorphismAlgebra end = endomorphism_algebra(right_module_over(s.algebra, inv.space));
  r.end_dim = end.algebra.dim();

  GaloisPairs pairs, pointwise;
  const FiniteGroupoid& g = ga.groupoid();
  for (Index e = 0; e < g.object_count(); ++e) {
    Vector u = Vector::Zero(s.dim());
    for (Index x : s.action.fiber(e)) {
      u += s.idempotent(x);
      pointwise.emplace_back(s.idempotent(x), s.idempotent(x));
    }
    pairs.emplace_back(u, u);
  }
  const Verdict gal = galois_check(gamma.action, pairs);
  r.galois_ok = gal.ok;
  if (!gal) r.details.push_back("{u_e, u_e} fails " + gal.witness);
  const Verdict point = galois_check(gamma.action, pointwise);
  r.galois_pointwise_ok = point.ok;
  if (!point) r.details.push_back("pointwise idempotents fail " + point.witness);

  try {
    const GaloisMap map = canonical_galois_map(gamma.action, skew, end);
    r.map_rank = map.rank;
    r.map_ok = map.bijective;
    if (!map.bijective)
      r.details.push_back("canonical map has rank " + std::to_string(map.rank) + " between dimensions " +
                          std::to_string(r.skew_dim) + " and " + std::to_string(r.end_dim));
  } catch (const Error& e) {
    r.map_ok = false;
    r.details.push_back(e.what());
  }
  r.built = {s.algebra, skew.algebra, inv.algebra, end.algebra};
  return r;
}

CosetDualityReport coset_duality(const SubgroupoidView& h, const GradedAlgebra& ga) {
  if (!h.wide()) fail(ErrorCode::NotWide, "coset duality needs a wide subgroupoid");
  const FiniteGroupoid& g = h.parent();
  if (!(g == ga.groupoid())) fail(ErrorCode::DimMismatch, "algebra is graded by a different groupoid");
  const BiSet biset = BiSet::validate(left_translation_action(g), right_translation_action(h));
  const CosetPartition cosets = right_cosets(h);
  const auto orbits = orbit_partition(biset.k_action());

  CosetDualityReport r;
  r.coset_count = static_cast<Index>(cosets.blocks.size());
  auto inverted = orbits;
  for (auto& b : inverted)
    for (Index& x : b) x = g.inverse(x);
  r.cosets_match = sorted_blocks(inverted) == sorted_blocks(cosets.blocks);
  r.cosets_match_literal = sorted_blocks(orbits) == sorted_blocks(cosets.blocks);
  r.duality = verify_duality(biset, ga);
  if (!r.cosets_match) r.duality.details.push_back("orbits of the right translation are not the right cosets");
  return r;
}

PartialBijectionReport partial_bijection_duality(const GSetAction& action, const GradedAlgebra& ga, Index limit) {
  if (!action.split()) fail(ErrorCode::NotSplit, "the action must be split");
  if (!is_transitive(action)) fail(ErrorCode::NotTransitive, "the action has more than one orbit");
  const PartialBijections pb = partial_bijection_groupoid(action, limit);
  const BiSet biset = BiSet::validate(action, pb.action);
  PartialBijectionReport r;
  r.objects = pb.groupoid.object_count();
  r.morphisms = pb.groupoid.size();
  r.duality = verify_duality(biset, ga);
  return r;
}

WeakHopfReport weak_hopf_smash(const GradedAlgebra& ga) {
  const FiniteGroupoid& g = ga.groupoid();
  const StructureAlgebra& a = ga.algebra();
  const DualGroupoidAlgebra dual = dual_groupoid_algebra(g);

  std::vector<std::pair<Index, Index>> labels;
  std::vector<Index> lookup(sz(a.dim() * g.size()), kNone);
  std::vector<std::string> names;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index h : g.morphisms_to(g.dom(ga.deg(i)))) {
      lookup[sz(i * g.size() + h)] = static_cast<Index>(labels.size());
      labels.emplace_back(i, h);
      names.push_back(a.basis_name(i) + "#v_" + g.morphism_name(h));
    }
  const Index dim = static_cast<Index>(labels.size());

  // (b_i # v_f)(b_j # v_h) = sum over (l1, l2) in Delta(v_f) of b_i (v_l1 . b_j) # v_l2 v_h,
  // with v_l . b_j = b_j exactly when deg b_j = l.
  std::vector<std::vector<Term>> table(sz(dim * dim));
  for (Index p = 0; p < dim; ++p)
    for (Index q = 0; q < dim; ++q) {
      const auto [i, f] = labels[sz(p)];
      const auto [j, h] = labels[sz(q)];
      for (const auto& [l1, l2] : dual.coproduct[sz(f)]) {
        if (ga.deg(j) != l1) continue;
        const Index keep = dual.algebra.terms(l2, h).empty() ? kNone : dual.algebra.terms(l2, h).front().index;
        if (keep == kNone) continue;
        for (const Term& t : a.terms(i, j)) {
          const Index target = lookup[sz(t.index * g.size() + keep)];
          if (target == kNone)
            fail(ErrorCode::NotIso, "product leaves the basis at (" + names[sz(p)] + ", " + names[sz(q)] + ")");
          table[sz(p * dim + q)].push_back({target, t.coeff});
        }
      }
    }
  const StructureAlgebra bare = StructureAlgebra::validate(dim, table, std::nullopt, names);
  const auto unit = find_unit(bare);
  if (!unit) fail(ErrorCode::NotIso, "A#kG* has no unit");

  const GSetAction x = left_translation_action(g);
  const SmashAlgebra s = smash_product(ga, x);
  WeakHopfReport r{StructureAlgebra::validate(dim, std::move(table), unit, std::move(names)),
                   labels,
                   {Matrix::Zero(s.dim(), dim)},
                   check_dual_identities(dual),
                   false,
                   {}};
  for (Index p = 0; p < dim; ++p) {
    const Index target = s.index_of(labels[sz(p)].first, labels[sz(p)].second);
    if (target == kNone) fail(ErrorCode::NotIso, "psi is not defined on " + r.smash.basis_name(p));
    r.psi.matrix(target, p) = 1;
  }
  const Verdict hom = check_unital_homomorphism(r.smash, s.algebra, r.psi.matrix);
  if (!hom) fail(ErrorCode::NotIso, "psi: " + hom.witness);
  if (dim != s.dim() || rank<Scalar>(r.psi.matrix) != dim) fail(ErrorCode::NotIso, "psi is not bijective");
  r.psi_iso = true;

  const BiSet biset = BiSet::validate(x, right_translation_action(whole_subgroupoid(g)));
  r.duality = verify_duality(biset, ga);
  return r;
}

}  // namespace gsm
