#include <gsm/error.hpp>
#include <gsm/morita.hpp>

#include <algorithm>

namespace gsm {

namespace {

size_t sz(Index i) { return static_cast<size_t>(i); }

Matrix projection(const std::vector<Index>& deg, Index x) {
  const Index n = static_cast<Index>(deg.size());
  Matrix p = Matrix::Zero(n, n);
  for (Index m = 0; m < n; ++m)
    if (deg[sz(m)] == x) p(m, m) = 1;
  return p;
}

}  // namespace

XGradedModule validate_xgraded(GradedAlgebra ga, GSetAction action, ModuleRep module, std::vector<Index> deg) {
  if (!action.split()) fail(ErrorCode::NotSplit, "X-graded modules need a split action");
  if (!(ga.groupoid() == action.groupoid())) fail(ErrorCode::DimMismatch, "algebra and action use different groupoids");
  if (module.side() != Side::Left) fail(ErrorCode::Module, "X-graded modules are left modules");
  if (module.algebra().dim() != ga.dim()) fail(ErrorCode::DimMismatch, "module is over an algebra of another dimension");
  if (static_cast<Index>(deg.size()) != module.dim()) fail(ErrorCode::Malformed, "one point per module basis vector");
  for (Index x : deg)
    if (x < 0 || x >= action.carrier_size()) fail(ErrorCode::Malformed, "module degree is not a point");

  const FiniteGroupoid& g = ga.groupoid();
  for (Index i = 0; i < ga.dim(); ++i) {
    const Index d = ga.deg(i);
    const Matrix& a = module.act(i);
    for (Index m = 0; m < module.dim(); ++m) {
      const Index x = deg[sz(m)];
      const Index target = action.in_fiber(g.dom(d), x) ? action.apply(d, x) : kNone;
      for (Index r = 0; r < module.dim(); ++r) {
        if (a(r, m).is_zero() || deg[sz(r)] == target) continue;
        fail(ErrorCode::XGrading, "(" + g.morphism_name(d) + ", " + action.point_name(x) + ", " +
                                      ga.algebra().basis_name(i) + "): basis vector " + std::to_string(m) +
                                      (target == kNone ? " must be annihilated"
                                                       : " must land over " + action.point_name(target)));
      }
    }
  }
  return {std::move(ga), std::move(action), std::move(module), std::move(deg)};
}

ModuleRep to_smash_module(const XGradedModule& m, const SmashAlgebra& s) {
  std::vector<Matrix> act;
  for (const SmashLabel& l : s.labels) act.push_back(m.module.act(l.a) * projection(m.deg, l.x));
  return ModuleRep::validate(s.algebra, std::move(act), Side::Left);
}

ModuleRep to_smash_module(const XGradedModule& m) { return to_smash_module(m, smash_product(m.algebra, m.action)); }

XGradedResult to_xgraded(const SmashAlgebra& s, const ModuleRep& v) {
  if (v.side() != Side::Left || v.algebra().dim() != s.dim())
    fail(ErrorCode::Module, "expected a left module over the smash product");
  const Index n = v.dim();
  const Index points = s.action.carrier_size();
  std::vector<Matrix> proj;
  for (Index x = 0; x < points; ++x) proj.push_back(v.act_vector(s.idempotent(x)));

  bool adapted = true;
  std::vector<Index> deg(sz(n), kNone);
  for (Index x = 0; x < points && adapted; ++x)
    for (Index r = 0; r < n && adapted; ++r)
      for (Index c = 0; c < n; ++c) {
        const Scalar& e = proj[sz(x)](r, c);
        if (r != c ? !e.is_zero() : !(e.is_zero() || e == 1)) {
          adapted = false;
          break;
        }
        if (r == c && e == 1) deg[sz(r)] = x;
      }
  if (adapted && std::find(deg.begin(), deg.end(), kNone) != deg.end()) adapted = false;

  std::vector<Matrix> act = v.actions();
  std::optional<Matrix> change;
  if (!adapted) {
    Matrix basis(n, n);
    Index col = 0;
    deg.clear();
    for (Index x = 0; x < points; ++x) {
      const Subspace image = Subspace::column_span(proj[sz(x)]);
      for (Index r = 0; r < image.dim(); ++r) {
        if (col >= n) fail(ErrorCode::Module, "idempotent images overlap");
        basis.col(col++) = image.basis_vector(r);
        deg.push_back(x);
      }
    }
    const auto inv = col == n ? inverse<Scalar>(basis) : std::nullopt;
    if (!inv) fail(ErrorCode::Module, "idempotent images do not decompose the module");
    for (Matrix& a : act) a = *inv * a * basis;
    change = basis;
  }

  const Matrix eta = eta_embedding(s).matrix;
  const ModuleRep over_smash = ModuleRep::validate(s.algebra, std::move(act), Side::Left);
  std::vector<Matrix> a_act;
  for (Index i = 0; i < s.source.dim(); ++i) a_act.push_back(over_smash.act_vector(eta.col(i)));
  return {validate_xgraded(s.source, s.action, ModuleRep::validate(s.source.algebra(), std::move(a_act), Side::Left),
                           std::move(deg)),
          std::move(change)};
}

Subspace module_homs(const ModuleRep& m, const ModuleRep& n, const std::vector<std::vector<bool>>* mask) {
  const Index cols = m.dim();
  const Index rows = n.dim();
  const Index unknowns = rows * cols;
  auto at = [rows](Index r, Index c) { return r + c * rows; };
  std::vector<Matrix> blocks;
  for (Index b = 0; b < m.algebra().dim(); ++b) {
    const Matrix& a = m.act(b);
    const Matrix& bb = n.act(b);
    Matrix block = Matrix::Zero(unknowns, unknowns);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) {
        for (Index k = 0; k < cols; ++k)
          if (!a(k, c).is_zero()) block(at(r, c), at(r, k)) += a(k, c);
        for (Index k = 0; k < rows; ++k)
          if (!bb(r, k).is_zero()) block(at(r, c), at(k, c)) -= bb(r, k);
      }
    blocks.push_back(std::move(block));
  }
  if (mask) {
    std::vector<Index> forced;
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c)
        if (!(*mask)[sz(r)][sz(c)]) forced.push_back(at(r, c));
    Matrix block = Matrix::Zero(static_cast<Index>(forced.size()), unknowns);
    for (size_t i = 0; i < forced.size(); ++i) block(static_cast<Index>(i), forced[i]) = 1;
    blocks.push_back(std::move(block));
  }
  std::vector<SparseRowT<Scalar>> equations;
  for (const Matrix& block : blocks)
    for (Index r = 0; r < block.rows(); ++r) {
      SparseRowT<Scalar> eq;
      for (Index c = 0; c < unknowns; ++c)
        if (!block(r, c).is_zero()) eq.emplace_back(c, block(r, c));
      if (!eq.empty()) equations.push_back(std::move(eq));
    }
  return Subspace::column_span(sparse_nullspace<Scalar>(equations, unknowns));
}

Subspace graded_homs(const XGradedModule& m, const XGradedModule& n) {
  std::vector<std::vector<bool>> mask(sz(n.module.dim()), std::vector<bool>(sz(m.module.dim())));
  for (Index r = 0; r < n.module.dim(); ++r)
    for (Index c = 0; c < m.module.dim(); ++c) mask[sz(r)][sz(c)] = n.deg[sz(r)] == m.deg[sz(c)];
  return module_homs(m.module, n.module, &mask);
}

Verdict morphism_compatibility(const XGradedModule& m, const XGradedModule& n) {
  const SmashAlgebra s = smash_product(m.algebra, m.action);
  const Subspace graded = graded_homs(m, n);
  const Subspace smash = module_homs(to_smash_module(m, s), to_smash_module(n, s));
  if (!(graded == smash))
    return Verdict::no("graded A-maps span dimension " + std::to_string(graded.dim()) + ", smash-module maps " +
                       std::to_string(smash.dim()));
  return Verdict::yes();
}

Verdict roundtrip_check(const XGradedModule& m) {
  const SmashAlgebra s = smash_product(m.algebra, m.action);
  const XGradedResult back = to_xgraded(s, to_smash_module(m, s));
  if (back.change_of_basis) return Verdict::no("F(G(M)) needed a change of basis");
  if (back.graded.deg != m.deg) return Verdict::no("F(G(M)) changed the point assignment");
  for (Index i = 0; i < m.algebra.dim(); ++i)
    if (back.graded.module.act(i) != m.module.act(i))
      return Verdict::no("F(G(M)) changed the action of " + m.algebra.algebra().basis_name(i));
  return morphism_compatibility(m, m);
}

Verdict roundtrip_check(const SmashAlgebra& s, const ModuleRep& v) {
  const XGradedResult f = to_xgraded(s, v);
  const ModuleRep back = to_smash_module(f.graded, s);
  std::optional<Matrix> inv;
  if (f.change_of_basis) inv = inverse<Scalar>(*f.change_of_basis);
  for (Index q = 0; q < s.dim(); ++q) {
    const Matrix expected = f.change_of_basis ? Matrix(*inv * v.act(q) * *f.change_of_basis) : v.act(q);
    if (back.act(q) != expected) return Verdict::no("G(F(V)) changed the action of " + s.algebra.basis_name(q));
  }
  return morphism_compatibility(f.graded, f.graded);
}

ModuleRep random_smash_module(const SmashAlgebra& s, std::mt19937_64& rng, Index max_dim) {
  const Index points = s.action.carrier_size();
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> piece_count(1, 2);
  std::vector<Matrix> bases;  // per piece, columns in adapted order
  std::vector<std::vector<Index>> block_sizes;
  Index total = 0;

  const int wanted = piece_count(rng);
  for (int piece = 0; piece < wanted && points > 0; ++piece) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const Index x = std::uniform_int_distribution<Index>(0, points - 1)(rng);
      Vector c(s.dim());
      for (Index i = 0; i < s.dim(); ++i) c(i) = coeff(rng);
      // later attempts fall back to a single basis element to keep the ideal small
      if (attempt >= 32) {
        c.setZero();
        c(std::uniform_int_distribution<Index>(0, s.dim() - 1)(rng)) = 1;
      }
      const Vector gen = s.algebra.multiply(c, s.idempotent(x));
      if (is_zero(gen)) continue;
      std::vector<Vector> spanning;
      for (Index b = 0; b < s.dim(); ++b) spanning.push_back(s.algebra.multiply(unit_vector(s.dim(), b), gen));
      const Subspace ideal = Subspace::span(s.dim(), spanning);
      if (ideal.dim() == 0 || total + ideal.dim() > max_dim) continue;

      Matrix basis(s.dim(), ideal.dim());
      std::vector<Index> sizes;
      Index col = 0;
      for (Index y = 0; y < points; ++y) {
        std::vector<Vector> part;
        for (Index r = 0; r < ideal.dim(); ++r) part.push_back(s.algebra.multiply(s.idempotent(y), ideal.basis_vector(r)));
        const Subspace block = Subspace::span(s.dim(), part);
        Matrix q;
        do {
          q = Matrix(block.dim(), block.dim());
          for (Index i = 0; i < q.rows(); ++i)
            for (Index j = 0; j < q.cols(); ++j) q(i, j) = coeff(rng);
        } while (rank<Scalar>(q) != block.dim());
        const Matrix twisted = block.embedding() * q;
        for (Index j = 0; j < twisted.cols(); ++j) basis.col(col++) = twisted.col(j);
        sizes.push_back(block.dim());
      }
      if (col != ideal.dim()) fail(ErrorCode::Module, "idempotent pieces do not decompose the ideal");
      bases.push_back(std::move(basis));
      block_sizes.push_back(std::move(sizes));
      total += ideal.dim();
      break;
    }
  }

  std::vector<Matrix> act(sz(s.dim()), Matrix::Zero(total, total));
  Index offset = 0;
  for (const Matrix& basis : bases) {
    const Index d = basis.cols();
    for (Index b = 0; b < s.dim(); ++b) {
      const Matrix image = s.algebra.left_matrix(unit_vector(s.dim(), b)) * basis;
      for (Index j = 0; j < d; ++j) {
        const auto coords = solve<Scalar>(basis, Vector(image.col(j)));
        if (!coords) fail(ErrorCode::Module, "left ideal is not closed");
        act[sz(b)].block(offset, offset + j, d, 1) = *coords;
      }
    }
    offset += d;
  }
  return ModuleRep::validate(s.algebra, std::move(act), Side::Left);
}

SubalgebraSpan stabilizer_subalgebra(const GradedAlgebra& ga, const GSetAction& action, Index x) {
  const SubgroupoidView st = stabilizer(action, x);
  std::vector<Index> idx;
  for (Index i = 0; i < ga.dim(); ++i)
    if (st.contains(ga.deg(i))) idx.push_back(i);
  Subspace space = Subspace::coordinate(ga.dim(), idx);
  return {space, induced_subalgebra(ga.algebra(), space)};
}

Subspace hom_component(const GradedAlgebra& ga, const GSetAction& action, Index x, Index y) {
  if (!action.split()) fail(ErrorCode::NotSplit, "hom components need a split action");
  const FiniteGroupoid& g = ga.groupoid();
  const Index e = action.object_of(x);
  const Index f = action.object_of(y);
  std::vector<Index> idx;
  for (Index i = 0; i < ga.dim(); ++i) {
    const Index h = ga.deg(i);
    if (g.dom(h) == e && g.ran(h) == f && action.apply(h, x) == y) idx.push_back(i);
  }
  return Subspace::coordinate(ga.dim(), idx);
}

namespace {

/// Restricts an A-vector to the given basis indices; fails when it has support elsewhere.
Vector restrict_to(const Vector& a, const std::vector<Index>& idx, const std::string& where) {
  Vector out(static_cast<Index>(idx.size()));
  Index seen = 0;
  for (size_t k = 0; k < idx.size(); ++k) {
    out(static_cast<Index>(k)) = a(idx[k]);
    if (!a(idx[k]).is_zero()) ++seen;
  }
  Index nonzero = 0;
  for (Index i = 0; i < a.size(); ++i)
    if (!a(i).is_zero()) ++nonzero;
  if (nonzero != seen) fail(ErrorCode::Malformed, "product leaves " + where);
  return out;
}

Vector extend(const Vector& coords, const std::vector<Index>& idx, Index dim) {
  Vector out = Vector::Zero(dim);
  for (size_t k = 0; k < idx.size(); ++k) out(idx[k]) = coords(static_cast<Index>(k));
  return out;
}

/// Bilinear extension of a table indexed [a * cols + b].
Vector pair_value(const std::vector<Vector>& table, Index cols, const Vector& a, const Vector& b, Index out_dim) {
  Vector out = Vector::Zero(out_dim);
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i).is_zero()) continue;
    for (Index j = 0; j < b.size(); ++j)
      if (!b(j).is_zero()) out += a(i) * b(j) * table[sz(i * cols + j)];
  }
  return out;
}

}  // namespace

MoritaContext build_morita_context(const GradedAlgebra& ga, const GSetAction& action, Index x) {
  if (!action.split()) fail(ErrorCode::NotSplit, "the Morita context needs a split action");
  const FiniteGroupoid& g = ga.groupoid();
  const StructureAlgebra& a = ga.algebra();
  const Index ex = action.object_of(x);
  SmashAlgebra c = smash_product(ga, action);

  const SubgroupoidView st = stabilizer(action, x);
  std::vector<Index> d_basis, w_basis, w_point, v_basis, v_point;
  for (Index i = 0; i < a.dim(); ++i) {
    const Index h = ga.deg(i);
    if (st.contains(h)) d_basis.push_back(i);
    if (g.dom(h) == ex) {
      w_basis.push_back(i);
      w_point.push_back(action.apply(h, x));
    }
    if (g.ran(h) == ex) {
      v_basis.push_back(i);
      v_point.push_back(action.apply(g.inverse(h), x));
    }
  }
  StructureAlgebra d = induced_subalgebra(a, Subspace::coordinate(a.dim(), d_basis));
  const Index nw = static_cast<Index>(w_basis.size());
  const Index nv = static_cast<Index>(v_basis.size());
  const Index nd = static_cast<Index>(d_basis.size());
  auto basis = [&](Index i) { return unit_vector(a.dim(), i); };

  std::vector<Matrix> c_on_w, v_by_c;
  for (const SmashLabel& l : c.labels) {
    Matrix mw = Matrix::Zero(nw, nw);
    for (Index j = 0; j < nw; ++j)
      if (w_point[sz(j)] == l.x) mw.col(j) = restrict_to(a.basis_product(l.a, w_basis[sz(j)]), w_basis, "^xV");
    c_on_w.push_back(std::move(mw));

    Matrix mv = Matrix::Zero(nv, nv);
    for (Index j = 0; j < nv; ++j) {
      const Vector p = restrict_to(a.basis_product(v_basis[sz(j)], l.a), v_basis, "V^x");
      for (Index k = 0; k < nv; ++k)
        if (v_point[sz(k)] == l.x) mv(k, j) = p(k);
    }
    v_by_c.push_back(std::move(mv));
  }
  std::vector<Matrix> w_by_d, d_on_v;
  for (Index r = 0; r < nd; ++r) {
    Matrix mw(nw, nw);
    for (Index j = 0; j < nw; ++j) mw.col(j) = restrict_to(a.basis_product(w_basis[sz(j)], d_basis[sz(r)]), w_basis, "^xV");
    w_by_d.push_back(std::move(mw));
    Matrix mv(nv, nv);
    for (Index j = 0; j < nv; ++j) mv.col(j) = restrict_to(a.basis_product(d_basis[sz(r)], v_basis[sz(j)]), v_basis, "V^x");
    d_on_v.push_back(std::move(mv));
  }

  std::vector<Vector> round, square;
  for (Index j = 0; j < nv; ++j)
    for (Index i = 0; i < nw; ++i) {
      const Vector p = a.basis_product(v_basis[sz(j)], w_basis[sz(i)]);
      Vector out(nd);
      for (Index r = 0; r < nd; ++r) out(r) = p(d_basis[sz(r)]);
      round.push_back(std::move(out));
    }
  for (Index i = 0; i < nw; ++i)
    for (Index j = 0; j < nv; ++j) {
      const Vector p = a.basis_product(w_basis[sz(i)], v_basis[sz(j)]);
      Vector out = Vector::Zero(c.dim());
      for (Index k = 0; k < a.dim(); ++k) {
        if (p(k).is_zero()) continue;
        const Index at = c.index_of(k, v_point[sz(j)]);
        if (at == kNone) fail(ErrorCode::Malformed, "[w, v] leaves the smash basis");
        out(at) = p(k);
      }
      square.push_back(std::move(out));
    }

  MoritaContext ctx{c,
                    d,
                    d_basis,
                    w_basis,
                    w_point,
                    v_basis,
                    v_point,
                    x,
                    ModuleRep::validate(c.algebra, std::move(c_on_w), Side::Left),
                    ModuleRep::validate(d, std::move(w_by_d), Side::Right),
                    ModuleRep::validate(d, std::move(d_on_v), Side::Left),
                    ModuleRep::validate(c.algebra, std::move(v_by_c), Side::Right),
                    std::move(round),
                    std::move(square),
                    {}};
  (void)basis;

  const Index nc = c.dim();
  auto round_of = [&](const Vector& v, const Vector& w) { return pair_value(ctx.round, nw, v, w, nd); };
  auto square_of = [&](const Vector& w, const Vector& v) { return pair_value(ctx.square, nv, w, v, nc); };
  auto ev = [](Index n, Index i) { return unit_vector(n, i); };
  ContextChecks& ch = ctx.checks;

  for (Index q = 0; q < nc && ch.w_bimodule; ++q)
    for (Index r = 0; r < nd; ++r) {
      if (ctx.c_on_w.act(q) * ctx.w_by_d.act(r) != ctx.w_by_d.act(r) * ctx.c_on_w.act(q)) {
        ch.w_bimodule = Verdict::no("(c w) d != c (w d) at " + c.algebra.basis_name(q));
        break;
      }
      if (ctx.d_on_v.act(r) * ctx.v_by_c.act(q) != ctx.v_by_c.act(q) * ctx.d_on_v.act(r) && ch.v_bimodule)
        ch.v_bimodule = Verdict::no("(d v) c != d (v c) at " + c.algebra.basis_name(q));
    }

  for (Index j = 0; j < nv && ch.round_morphism; ++j)
    for (Index i = 0; i < nw && ch.round_morphism; ++i) {
      const Vector vj = ev(nv, j), wi = ev(nw, i), base = round_of(vj, wi);
      for (Index r = 0; r < nd; ++r) {
        const Vector dr = ev(nd, r);
        if (round_of(ctx.d_on_v.act(r) * vj, wi) != d.multiply(dr, base))
          ch.round_morphism = Verdict::no("(d v, w) != d (v, w)");
        else if (round_of(vj, ctx.w_by_d.act(r) * wi) != d.multiply(base, dr))
          ch.round_morphism = Verdict::no("(v, w d) != (v, w) d");
        if (!ch.round_morphism) break;
      }
      for (Index q = 0; q < nc && ch.round_morphism; ++q)
        if (round_of(ctx.v_by_c.act(q) * vj, wi) != round_of(vj, ctx.c_on_w.act(q) * wi))
          ch.round_morphism = Verdict::no("(v c, w) != (v, c w) at " + c.algebra.basis_name(q));
    }

  for (Index i = 0; i < nw && ch.square_morphism; ++i)
    for (Index j = 0; j < nv && ch.square_morphism; ++j) {
      const Vector wi = ev(nw, i), vj = ev(nv, j), base = square_of(wi, vj);
      for (Index q = 0; q < nc; ++q) {
        const Vector cq = ev(nc, q);
        if (square_of(ctx.c_on_w.act(q) * wi, vj) != c.algebra.multiply(cq, base))
          ch.square_morphism = Verdict::no("[c w, v] != c [w, v] at " + c.algebra.basis_name(q));
        else if (square_of(wi, ctx.v_by_c.act(q) * vj) != c.algebra.multiply(base, cq))
          ch.square_morphism = Verdict::no("[w, v c] != [w, v] c at " + c.algebra.basis_name(q));
        if (!ch.square_morphism) break;
      }
      for (Index r = 0; r < nd && ch.square_morphism; ++r)
        if (square_of(ctx.w_by_d.act(r) * wi, vj) != square_of(wi, ctx.d_on_v.act(r) * vj))
          ch.square_morphism = Verdict::no("[w d, v] != [w, d v]");
    }

  for (Index p = 0; p < nv && ch.assoc_round_first; ++p)
    for (Index i = 0; i < nw && ch.assoc_round_first; ++i)
      for (Index q = 0; q < nv; ++q) {
        const Vector lhs = ctx.d_on_v.act_vector(round_of(ev(nv, p), ev(nw, i))) * ev(nv, q);
        const Vector rhs = ctx.v_by_c.act_vector(square_of(ev(nw, i), ev(nv, q))) * ev(nv, p);
        if (lhs != rhs) {
          ch.assoc_round_first = Verdict::no("(a, b) c != a [b, c] at (" + a.basis_name(v_basis[sz(p)]) + ", " +
                                             a.basis_name(w_basis[sz(i)]) + ", " + a.basis_name(v_basis[sz(q)]) + ")");
          break;
        }
      }
  for (Index p = 0; p < nw && ch.assoc_square_first; ++p)
    for (Index j = 0; j < nv && ch.assoc_square_first; ++j)
      for (Index q = 0; q < nw; ++q) {
        const Vector lhs = ctx.c_on_w.act_vector(square_of(ev(nw, p), ev(nv, j))) * ev(nw, q);
        const Vector rhs = ctx.w_by_d.act_vector(round_of(ev(nv, j), ev(nw, q))) * ev(nw, p);
        if (lhs != rhs) {
          ch.assoc_square_first = Verdict::no("[a, b] c != a (b, c) at (" + a.basis_name(w_basis[sz(p)]) + ", " +
                                              a.basis_name(v_basis[sz(j)]) + ", " + a.basis_name(w_basis[sz(q)]) + ")");
          break;
        }
      }
  (void)extend;
  return ctx;
}

bool StrictnessReport::all_points() const {
  return std::all_of(per_point.begin(), per_point.end(), [](const auto& p) { return p.second; });
}

StrictnessReport strictness_report(const MoritaContext& ctx) {
  const GradedAlgebra& ga = ctx.ring_c.source;
  const GSetAction& action = ctx.ring_c.action;
  const FiniteGroupoid& g = ga.groupoid();
  const StructureAlgebra& a = ga.algebra();
  StrictnessReport r;
  r.square_surjective = Subspace::span(ctx.ring_c.dim(), ctx.square).is_full();
  r.round_surjective = Subspace::span(ctx.ring_d.dim(), ctx.round).is_full();
  r.morita_equivalent = r.square_surjective && r.round_surjective;

  Subspace all_identities(a.dim());
  for (Index e = 0; e < g.object_count(); ++e) all_identities = sum(all_identities, ga.component_space(g.identity(e)));
  r.literal_criterion = true;
  for (Index y = 0; y < action.carrier_size(); ++y) {
    const Index ey = action.object_of(y);
    Subspace total(a.dim());
    for (Index h : g.morphisms_from(ey))
      if (action.apply(h, y) == ctx.base_point)
        total = sum(total, product_span(a, ga.component_space(g.inverse(h)), ga.component_space(h)));
    r.per_point.emplace_back(y, total == ga.component_space(g.identity(ey)));
    if (!(total == all_identities)) r.literal_criterion = false;
  }
  return r;
}

}  // namespace gsm
