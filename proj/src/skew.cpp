#include <gsm/error.hpp>
#include <gsm/skew.hpp>

namespace gsm {

namespace {

size_t sz(Index i) { return static_cast<size_t>(i); }

Matrix stack(const std::vector<Matrix>& blocks, Index cols) {
  Index rows = 0;
  for (const Matrix& b : blocks) rows += b.rows();
  Matrix out(rows, cols);
  Index at = 0;
  for (const Matrix& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

}  // namespace

Matrix AlgebraAction::ambient_iso(Index k) const {
  const Subspace& src = ideals[sz(groupoid.dom(k))];
  const Subspace& dst = ideals[sz(groupoid.ran(k))];
  return dst.embedding() * isos[sz(k)] * src.coordinate_map();
}

const Vector& AlgebraAction::unit_of(Index p) const {
  const auto& u = units[sz(p)];
  if (!u) fail(ErrorCode::NoIdealUnit, "ideal E_" + groupoid.object_name(p) + " has no unit");
  return *u;
}

AlgebraAction validate_algebra_action(FiniteGroupoid k, StructureAlgebra b, std::vector<Subspace> ideals,
                                      std::vector<Matrix> isos) {
  if (static_cast<Index>(ideals.size()) != k.object_count()) fail(ErrorCode::Malformed, "one ideal per object expected");
  if (static_cast<Index>(isos.size()) != k.size()) fail(ErrorCode::Malformed, "one isomorphism per morphism expected");
  AlgebraAction act{std::move(k), std::move(b), std::move(ideals), std::move(isos), {}, false, false};
  const FiniteGroupoid& g = act.groupoid;
  const StructureAlgebra& alg = act.algebra;

  for (Index p = 0; p < g.object_count(); ++p) {
    const Subspace& e = act.ideals[sz(p)];
    if (e.ambient() != alg.dim()) fail(ErrorCode::DimMismatch, "ideal E_" + g.object_name(p) + " has the wrong ambient");
    const Verdict v = is_ideal(alg, e);
    if (!v) fail(ErrorCode::NotIdeal, "E_" + g.object_name(p) + ": " + v.witness);
  }

  for (Index m = 0; m < g.size(); ++m) {
    const Subspace& src = act.ideals[sz(g.dom(m))];
    const Subspace& dst = act.ideals[sz(g.ran(m))];
    const Matrix& iso = act.isos[sz(m)];
    const std::string name = "beta_" + g.morphism_name(m);
    if (iso.rows() != dst.dim() || iso.cols() != src.dim()) fail(ErrorCode::NotIso, name + " has the wrong shape");
    if (src.dim() != dst.dim() || rank<Scalar>(iso) != src.dim()) fail(ErrorCode::NotIso, name + " is not bijective");
    const Matrix amb = act.ambient_iso(m);
    for (Index r = 0; r < src.dim(); ++r)
      for (Index s = 0; s < src.dim(); ++s) {
        const Vector x = src.basis_vector(r), y = src.basis_vector(s);
        if (amb * alg.multiply(x, y) != alg.multiply(amb * x, amb * y))
          fail(ErrorCode::NotIso, name + " is not multiplicative at (" + format_element(alg, x) + ", " +
                                      format_element(alg, y) + ")");
      }
  }

  for (Index p = 0; p < g.object_count(); ++p) {
    const Index id = g.identity(p);
    const Index d = act.ideals[sz(p)].dim();
    if (act.isos[sz(id)] != Matrix::Identity(d, d))
      fail(ErrorCode::Cocycle, "beta_" + g.morphism_name(id) + " is not the identity");
  }
  for (Index a = 0; a < g.size(); ++a)
    for (Index c = 0; c < g.size(); ++c) {
      const Index ac = g.compose(a, c);
      if (ac == kNone) continue;
      if (act.isos[sz(a)] * act.isos[sz(c)] != act.isos[sz(ac)])
        fail(ErrorCode::Cocycle, "beta_" + g.morphism_name(a) + " beta_" + g.morphism_name(c) + " != beta_" +
                                     g.morphism_name(ac));
    }

  act.unital_pieces = true;
  Index total = 0;
  Subspace all(alg.dim());
  for (Index p = 0; p < g.object_count(); ++p) {
    const Subspace& e = act.ideals[sz(p)];
    const StructureAlgebra piece = induced_subalgebra(alg, e);
    if (piece.unital())
      act.units.push_back(Vector(e.embedding() * piece.unit()));
    else {
      act.units.push_back(std::nullopt);
      act.unital_pieces = false;
    }
    total += e.dim();
    all = sum(all, e);
  }
  act.direct_sum = total == alg.dim() && all.is_full();
  return act;
}

std::vector<Index> SkewRing::degrees() const {
  std::vector<Index> out;
  for (const SkewLabel& l : labels) out.push_back(l.k);
  return out;
}

SkewRing skew_groupoid_ring(const AlgebraAction& act) {
  const FiniteGroupoid& g = act.groupoid;
  const StructureAlgebra& alg = act.algebra;
  SkewRing ring{StructureAlgebra::validate(0, {}, std::nullopt), {}, {}};
  std::vector<std::string> names;
  for (Index k = 0; k < g.size(); ++k) {
    ring.offset.push_back(static_cast<Index>(ring.labels.size()));
    const Subspace& e = act.ideal(k);
    for (Index r = 0; r < e.dim(); ++r) {
      ring.labels.push_back({k, r});
      names.push_back("(" + format_element(alg, e.basis_vector(r)) + ")@" + g.morphism_name(k));
    }
  }
  const Index dim = static_cast<Index>(ring.labels.size());

  std::vector<Matrix> amb;
  for (Index k = 0; k < g.size(); ++k) amb.push_back(act.ambient_iso(k));
  std::vector<std::vector<Term>> table(sz(dim * dim));
  for (Index p = 0; p < dim; ++p)
    for (Index q = 0; q < dim; ++q) {
      const SkewLabel a = ring.labels[sz(p)], b = ring.labels[sz(q)];
      const Index ab = g.compose(a.k, b.k);
      if (ab == kNone) continue;
      const Vector x = act.ideal(a.k).basis_vector(a.r);
      const Vector y = act.ideal(b.k).basis_vector(b.r);
      const Vector prod = alg.multiply(x, amb[sz(a.k)] * y);
      const auto c = act.ideal(ab).coordinates(prod);
      if (!c) fail(ErrorCode::NotIdeal, "x beta(y) leaves E_" + g.morphism_name(ab));
      for (Index r = 0; r < c->size(); ++r)
        if (!(*c)(r).is_zero()) table[sz(p * dim + q)].push_back({ring.offset[sz(ab)] + r, (*c)(r)});
    }

  std::optional<Vector> unit;
  if (act.direct_sum && act.unital_pieces) {
    unit = Vector::Zero(dim);
    for (Index p = 0; p < g.object_count(); ++p) {
      const Index id = g.identity(p);
      const Vector c = *act.ideals[sz(p)].coordinates(act.unit_of(p));
      unit->segment(ring.offset[sz(id)], c.size()) = c;
    }
  }
  ring.algebra = StructureAlgebra::validate(dim, std::move(table), std::move(unit), std::move(names));
  return ring;
}

Invariants invariant_subalgebra(const AlgebraAction& act) {
  const FiniteGroupoid& g = act.groupoid;
  const StructureAlgebra& alg = act.algebra;
  std::vector<Matrix> blocks;
  for (Index k = 0; k < g.size(); ++k) {
    const Matrix lhs = act.ambient_iso(k) * alg.right_matrix(act.unit_of(g.dom(k)));
    const Matrix rhs = alg.right_matrix(act.unit_of(g.ran(k)));
    blocks.push_back(lhs - rhs);
  }
  const Subspace space = Subspace::column_span(nullspace<Scalar>(stack(blocks, alg.dim())));
  return {space, induced_subalgebra(alg, space)};
}

namespace {

Vector galois_target(const AlgebraAction& act, Index k) {
  return act.groupoid.is_identity(k) ? act.unit_of(act.groupoid.ran(k)) : Vector(Vector::Zero(act.algebra.dim()));
}

}  // namespace

Verdict galois_check(const AlgebraAction& act, const GaloisPairs& pairs) {
  const FiniteGroupoid& g = act.groupoid;
  const StructureAlgebra& alg = act.algebra;
  for (Index k = 0; k < g.size(); ++k) {
    const Matrix amb = act.ambient_iso(k);
    const Vector& u = act.unit_of(g.dom(k));
    Vector total = Vector::Zero(alg.dim());
    for (const auto& [x, y] : pairs) total += alg.multiply(x, amb * alg.multiply(y, u));
    const Vector want = galois_target(act, k);
    if (total != want)
      return Verdict::no("at " + g.morphism_name(k) + ": sum = " + format_element(alg, total) + ", expected " +
                         format_element(alg, want));
  }
  return Verdict::yes();
}

std::optional<GaloisPairs> find_galois_coordinates(const AlgebraAction& act) {
  const FiniteGroupoid& g = act.groupoid;
  const StructureAlgebra& alg = act.algebra;
  const Index n = alg.dim();
  // unknown t(a, b), flattened a * n + b, for T = sum t(a, b) b_a (x) b_b
  std::vector<Matrix> blocks;
  Vector rhs(g.size() * n);
  for (Index k = 0; k < g.size(); ++k) {
    const Matrix amb = act.ambient_iso(k);
    const Vector& u = act.unit_of(g.dom(k));
    Matrix block = Matrix::Zero(n, n * n);
    for (Index b = 0; b < n; ++b) {
      const Vector image = amb * alg.multiply(unit_vector(n, b), u);
      const Matrix right = alg.right_matrix(image);  // column a is b_a * image
      for (Index a = 0; a < n; ++a) block.col(a * n + b) = right.col(a);
    }
    blocks.push_back(std::move(block));
    rhs.segment(k * n, n) = galois_target(act, k);
  }
  const auto t = solve<Scalar>(stack(blocks, n * n), rhs);
  if (!t) return std::nullopt;

  Matrix tm(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) tm(a, b) = (*t)(a * n + b);
  const Echelon e = row_reduce<Scalar>(tm);
  GaloisPairs pairs;
  for (size_t r = 0; r < e.pivots.size(); ++r)
    pairs.emplace_back(Vector(tm.col(e.pivots[r])), Vector(e.rows.row(static_cast<Index>(r)).transpose()));
  const Verdict v = galois_check(act, pairs);
  if (!v) fail(ErrorCode::Malformed, "rank factorisation lost the Galois identity: " + v.witness);
  return pairs;
}

GammaAction gamma_action(const BiSet& biset, const GradedAlgebra& ga) {
  const GSetAction& ka = biset.k_action();
  if (!ka.split()) fail(ErrorCode::NotSplitK, "the K-action must be split");
  const FiniteGroupoid& k = ka.groupoid();
  SmashAlgebra s = smash_product(ga, biset.g_action());

  std::vector<Subspace> ideals;
  for (Index p = 0; p < k.object_count(); ++p) {
    std::vector<Index> lines;
    for (Index q = 0; q < s.dim(); ++q)
      if (ka.in_fiber(p, s.labels[sz(q)].x)) lines.push_back(q);
    ideals.push_back(Subspace::coordinate(s.dim(), lines));
  }

  std::vector<Matrix> isos;
  for (Index m = 0; m < k.size(); ++m) {
    const RestrictedAction r = restricted_action(biset, k.inverse(m));  // beta_{k^-1} : Y_k -> Y_{k^-1}
    const GSetMorphism phi = make_morphism(r.source.action, r.target.action, r.beta);
    const InducedMorphism star = induced_morphism(phi, ga);  // A#Y_{k^-1} -> A#Y_k
    const Subspace& src = ideals[sz(k.dom(m))];
    const Subspace& dst = ideals[sz(k.ran(m))];
    auto global = [&](const SmashAlgebra& local, const SubGSet& sub, Index q) {
      const SmashLabel l = local.labels[sz(q)];
      return s.index_of(l.a, sub.embedding[sz(l.x)]);
    };
    Matrix amb_src = Matrix::Zero(s.dim(), star.source.dim());
    for (Index q = 0; q < star.source.dim(); ++q) amb_src(global(star.source, r.target, q), q) = 1;
    Matrix amb_dst = Matrix::Zero(s.dim(), star.target.dim());
    for (Index q = 0; q < star.target.dim(); ++q) amb_dst(global(star.target, r.source, q), q) = 1;
    // beta_m in ideal coordinates: coord_dst * amb_dst * phi* * (amb_src)^T * emb_src
    isos.push_back(dst.coordinate_map() * amb_dst * star.map.matrix * amb_src.transpose() * src.embedding());
  }

  AlgebraAction act = validate_algebra_action(k, s.algebra, std::move(ideals), std::move(isos));
  if (!act.direct_sum) fail(ErrorCode::NotUnitalDecomp, "A#X is not the direct sum of the E_p");
  return {std::move(s), std::move(act)};
}

FixedOrbitReport fixed_vs_orbit_image(const BiSet& biset, const GradedAlgebra& ga) {
  const OrbitGSet orbits = orbit_gset(biset);
  const InducedMorphism star = induced_morphism(orbits.projection, ga);
  const GammaAction gamma = gamma_action(biset, ga);
  FixedOrbitReport r;
  r.orbit_smash_dim = star.source.dim();
  r.image = Subspace::column_span(star.map.matrix);
  r.invariants = invariant_subalgebra(gamma.action).space;
  r.image_dim = r.image.dim();
  r.invariant_dim = r.invariants.dim();
  r.equal = r.image == r.invariants;
  return r;
}

}  // namespace gsm
