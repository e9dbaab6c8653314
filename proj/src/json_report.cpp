#include <gsm/json_report.hpp>

namespace gsm {

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

Json scalar_json(const Scalar& q) { return to_string(q); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_json(v(i)));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r).transpose()));
  return out;
}

Json error_json(const Error& e) { return {{"code", std::string(code_name(e.code()))}, {"witness", e.witness()}}; }

Json groupoid_json(const FiniteGroupoid& g) {
  Json objects = Json::array();
  for (Index e = 0; e < g.object_count(); ++e) objects.push_back(g.object_name(e));
  Json morphisms = Json::array();
  for (Index m = 0; m < g.size(); ++m)
    morphisms.push_back({{"name", g.morphism_name(m)},
                         {"from", g.object_name(g.dom(m))},
                         {"to", g.object_name(g.ran(m))},
                         {"inverse", g.morphism_name(g.inverse(m))}});
  return {{"objects", objects}, {"morphisms", morphisms}};
}

Json algebra_json(const StructureAlgebra& a) {
  Json products = Json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      if (a.terms(i, j).empty()) continue;
      products.push_back({{"left", a.basis_name(i)},
                          {"right", a.basis_name(j)},
                          {"value", format_element(a, a.basis_product(i, j))}});
    }
  Json unit = a.unital() ? vector_json(a.unit()) : Json(nullptr);
  return {{"dim", a.dim()}, {"basis", a.basis_names()}, {"unit", unit}, {"products", products}};
}

Json graded_json(const GradedAlgebra& ga) {
  Json j = algebra_json(ga.algebra());
  Json deg = Json::array();
  for (Index i = 0; i < ga.dim(); ++i) deg.push_back(ga.groupoid().morphism_name(ga.deg(i)));
  j["degrees"] = deg;
  return j;
}

Json action_json(const GSetAction& a) {
  const FiniteGroupoid& g = a.groupoid();
  Json fibers = Json::object();
  for (Index e = 0; e < g.object_count(); ++e) {
    Json pts = Json::array();
    for (Index x : a.fiber(e)) pts.push_back(a.point_name(x));
    fibers[g.object_name(e)] = pts;
  }
  return {{"points", a.point_names()}, {"fibers", fibers}, {"split", a.split()}};
}

Json module_json(const XGradedModule& m) {
  Json deg = Json::array();
  for (Index x : m.deg) deg.push_back(m.action.point_name(x));
  return {{"dim", m.module.dim()}, {"deg", deg}};
}

Json duality_json(const DualityReport& r) {
  return {{"dims", {r.skew_dim, r.end_dim}},
          {"smashDim", r.smash_dim},
          {"invariantDim", r.invariant_dim},
          {"mapRank", r.map_rank},
          {"mapOK", r.map_ok},
          {"galoisOK", r.galois_ok},
          {"galoisPointwiseOK", r.galois_pointwise_ok},
          {"fixedEqualsImage", r.fixed_equals_image},
          {"fullyFaithful", r.fully_faithful},
          {"fullyFaithfulWitness", r.fully_faithful_witness},
          {"details", r.details}};
}

namespace {

Json names_of(const StructureAlgebra& a, const std::vector<Index>& idx) {
  Json out = Json::array();
  for (Index i : idx) out.push_back(a.basis_name(i));
  return out;
}

Json points_of(const GSetAction& action, const std::vector<Index>& idx) {
  Json out = Json::array();
  for (Index x : idx) out.push_back(action.point_name(x));
  return out;
}

Json verdict_json(const Verdict& v) { return {{"ok", v.ok}, {"witness", v.witness}}; }

}  // namespace

Json morita_json(const MoritaContext& ctx, const StrictnessReport& s) {
  const StructureAlgebra& a = ctx.ring_c.source.algebra();
  const GSetAction& action = ctx.ring_c.action;
  const Index nw = ctx.w_dim();
  const Index nv = ctx.v_dim();

  Json square = Json::array();
  for (Index i = 0; i < nw; ++i)
    for (Index j = 0; j < nv; ++j) {
      const Vector& val = ctx.square[static_cast<size_t>(i * nv + j)];
      if (is_zero(val)) continue;
      square.push_back({{"w", a.basis_name(ctx.w_basis[static_cast<size_t>(i)])},
                        {"v", a.basis_name(ctx.v_basis[static_cast<size_t>(j)])},
                        {"value", format_element(ctx.ring_c.algebra, val)}});
    }
  // D coordinates are rendered back in A so the names stay readable
  Matrix d_embed = Matrix::Zero(a.dim(), static_cast<Index>(ctx.d_basis.size()));
  for (size_t r = 0; r < ctx.d_basis.size(); ++r) d_embed(ctx.d_basis[r], static_cast<Index>(r)) = 1;
  Json round = Json::array();
  for (Index j = 0; j < nv; ++j)
    for (Index i = 0; i < nw; ++i) {
      const Vector& val = ctx.round[static_cast<size_t>(j * nw + i)];
      if (is_zero(val)) continue;
      round.push_back({{"v", a.basis_name(ctx.v_basis[static_cast<size_t>(j)])},
                       {"w", a.basis_name(ctx.w_basis[static_cast<size_t>(i)])},
                       {"value", format_element(a, d_embed * val)}});
    }

  Json per_point = Json::object();
  for (const auto& [y, ok] : s.per_point) per_point[action.point_name(y)] = ok;
  const ContextChecks& c = ctx.checks;
  return {{"basePoint", action.point_name(ctx.base_point)},
          {"dBasis", names_of(a, ctx.d_basis)},
          {"wBasis", names_of(a, ctx.w_basis)},
          {"wPoints", points_of(action, ctx.w_point)},
          {"vBasis", names_of(a, ctx.v_basis)},
          {"vPoints", points_of(action, ctx.v_point)},
          {"square", square},
          {"round", round},
          {"contextAxioms",
           {{"wBimodule", verdict_json(c.w_bimodule)},
            {"vBimodule", verdict_json(c.v_bimodule)},
            {"roundMorphism", verdict_json(c.round_morphism)},
            {"squareMorphism", verdict_json(c.square_morphism)},
            {"assocRoundFirst", verdict_json(c.assoc_round_first)},
            {"assocSquareFirst", verdict_json(c.assoc_square_first)}}},
          {"squareSurjective", s.square_surjective},
          {"roundSurjective", s.round_surjective},
          {"perPointCriterion", per_point},
          {"literalCriterion", s.literal_criterion},
          {"moritaEquivalent", s.morita_equivalent}};
}

}  // namespace gsm
