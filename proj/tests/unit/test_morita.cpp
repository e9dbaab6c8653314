#include <doctest.h>

#include "../support/errors.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

#include <gsm/morita.hpp>

using namespace gsm;
using fx::code_of;

namespace {

// The two-dimensional module of column vectors, x and y the two coordinates.
XGradedModule column_module() {
  std::vector<Matrix> act;
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      Matrix m = Matrix::Zero(2, 2);
      m(i, j) = 1;
      act.push_back(m);
    }
  ModuleRep rep = ModuleRep::validate(fx::m2().algebra(), act, Side::Left);
  return validate_xgraded(fx::m2(), fx::xef(), rep, {0, 1});
}

}  // namespace

TEST_CASE("x-graded modules") {
  const XGradedModule m = column_module();
  CHECK(roundtrip_check(m).ok);
  CHECK(morphism_compatibility(m, m).ok);
  CHECK(graded_homs(m, m).dim() == 1);

  const ModuleRep rep = m.module;
  CHECK(code_of([&] { validate_xgraded(fx::m2(), fx::xef(), rep, {0, 0}); }) == ErrorCode::XGrading);

  const ModuleRep zero = ModuleRep::validate(fx::m2().algebra(), std::vector<Matrix>(4, Matrix(0, 0)), Side::Left);
  const XGradedModule z = validate_xgraded(fx::m2(), fx::xef(), zero, {});
  CHECK(to_smash_module(z).dim() == 0);
  CHECK(roundtrip_check(z).ok);
}

TEST_CASE("the smash product as a module over itself") {
  const SmashAlgebra s = smash_product(fx::m2(), left_translation_action(fx::pair2()));
  const ModuleRep reg = regular_module(s.algebra, Side::Left);
  const XGradedResult f = to_xgraded(s, reg);
  CHECK_FALSE(f.change_of_basis.has_value());
  // (1 delta_z)(b_i delta_x) survives only for z = alpha_{deg b_i}(x)
  for (Index l = 0; l < s.dim(); ++l) {
    const SmashLabel& lab = s.labels[static_cast<size_t>(l)];
    CHECK(f.graded.deg[static_cast<size_t>(l)] == s.action.apply(s.source.deg(lab.a), lab.x));
  }
  CHECK(roundtrip_check(s, reg).ok);
}

TEST_CASE("round trips of random modules are literal") {
  const SmashAlgebra s = smash_product(fx::m2(), fx::xef());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    const ModuleRep v = random_smash_module(s, rng, 6);
    CHECK(v.dim() <= 6);
    CHECK_FALSE(to_xgraded(s, v).change_of_basis.has_value());
    CHECK(roundtrip_check(s, v).ok);
  }
}

TEST_CASE("a basis not adapted to the idempotents is rebased") {
  const SmashAlgebra s = smash_product(fx::m2(), fx::xef());
  const ModuleRep reg = regular_module(s.algebra, Side::Left);
  Matrix p = Matrix::Identity(4, 4);
  p(0, 3) = 1;  // mixes the x and y parts
  const Matrix inv = *inverse<Scalar>(p);
  std::vector<Matrix> act;
  for (const Matrix& a : reg.actions()) act.push_back(inv * a * p);
  const ModuleRep twisted = ModuleRep::validate(s.algebra, act, Side::Left);
  CHECK(to_xgraded(s, twisted).change_of_basis.has_value());
  CHECK(roundtrip_check(s, twisted).ok);
}

TEST_CASE("stabilizer subalgebras and hom components") {
  const GradedAlgebra m = fx::m2();
  const GSetAction x = fx::xef();
  const SubalgebraSpan st = stabilizer_subalgebra(m, x, 0);
  CHECK(st.space == Subspace::coordinate(4, {0}));
  CHECK(hom_component(m, x, 0, 1) == Subspace::coordinate(4, {2}));
  CHECK(hom_component(m, x, 0, 0) == st.space);

  const GradedAlgebra kg = groupoid_algebra(fx::pair2());
  CHECK(stabilizer_subalgebra(kg, x, 0).space == Subspace::coordinate(4, {0}));

  const SubalgebraSpan whole = stabilizer_subalgebra(fx::kz2(), trivial_action(cyclic_group(2), {0}), 0);
  CHECK(whole.space.is_full());

  CHECK(hom_component(m, fx::xef_copies(2), 0, 3).is_zero());
}

TEST_CASE("context at x") {
  const MoritaContext ctx = build_morita_context(fx::m2(), fx::xef(), 0);
  CHECK(ctx.w_basis == std::vector<Index>{0, 2});
  CHECK(ctx.v_basis == std::vector<Index>{0, 1});
  CHECK(ctx.d_basis == std::vector<Index>{0});
  CHECK(ctx.checks.ok());

  // [E21, E12] = E22 delta_y and (E12, E21) = E11
  const Vector sq = ctx.square[static_cast<size_t>(1 * ctx.v_dim() + 1)];
  CHECK(sq == unit_vector(ctx.ring_c.dim(), ctx.ring_c.index_of(3, 1)));
  const Vector rd = ctx.round[static_cast<size_t>(1 * ctx.w_dim() + 1)];
  CHECK(rd == unit_vector(1, 0));

  CHECK(oracle::associative_unital(ctx.ring_d).ok);

  const StrictnessReport s = strictness_report(ctx);
  CHECK(s.square_surjective);
  CHECK(s.round_surjective);
  CHECK(s.all_points());
  CHECK(s.morita_equivalent);
  CHECK_FALSE(s.literal_criterion);
}

TEST_CASE("zero off-diagonal control") {
  const MoritaContext ctx = build_morita_context(fx::qxq(), fx::xef(), 0);
  CHECK(ctx.checks.ok());
  const StrictnessReport s = strictness_report(ctx);
  CHECK_FALSE(s.square_surjective);
  CHECK_FALSE(s.morita_equivalent);
  bool y_fails = false;
  for (const auto& [point, ok] : s.per_point)
    if (point == 1) y_fails = !ok;
  CHECK(y_fails);
}

TEST_CASE("groupoid algebra context is strict") {
  const MoritaContext ctx = build_morita_context(groupoid_algebra(fx::pair2()), fx::xef(), 1);
  CHECK(ctx.checks.ok());
  CHECK(strictness_report(ctx).morita_equivalent);
}
