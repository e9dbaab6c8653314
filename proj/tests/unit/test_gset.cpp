#include <doctest.h>

#include "../support/errors.hpp"
#include "../support/fixtures.hpp"

#include <gsm/gset.hpp>

#include <algorithm>

using namespace gsm;
using fx::code_of;

TEST_CASE("validate_action") {
  const GSetAction x = fx::xef();
  CHECK(x.split());
  CHECK(x.apply(1, 0) == 1);
  CHECK(x.apply(2, 1) == 0);
  CHECK(x.apply(1, 1) == kNone);
  CHECK(x.object_of(1) == 1);
  CHECK(x.find_point("y") == 1);

  // trivial groupoid on three points
  const GSetAction t = trivial_action(pair_groupoid(1), {0, 0, 0});
  CHECK(t.split());
  CHECK(orbit_partition(t).size() == 3);

  // alpha_{f->e}(y) = y leaves X_e
  const auto bad = code_of([] { GSetAction::validate(fx::pair2(), 2, {{0}, {1}}, {{0}, {1}, {1}, {1}}); });
  REQUIRE(bad);
  CHECK((*bad == ErrorCode::NotBijective || *bad == ErrorCode::Cocycle));

  // identity acting as a swap
  const auto not_id = code_of([] { GSetAction::validate(cyclic_group(2), 2, {{0, 1}}, {{1, 0}, {1, 0}}); });
  CHECK(not_id == ErrorCode::IdentityAction);

  // overlapping fibers are allowed and reported non-split
  const GSetAction overlap = GSetAction::validate(fx::pair2(), 1, {{0}, {0}}, {{0}, {0}, {0}, {0}});
  CHECK_FALSE(overlap.split());
  CHECK(code_of([&] { orbit(overlap, 0); }) == ErrorCode::NotSplit);
}

TEST_CASE("translation actions") {
  const FiniteGroupoid g = fx::pair2();
  const GSetAction left = left_translation_action(g);
  CHECK(left.fiber(0) == g.morphisms_to(0));
  CHECK(left.fiber(0).size() == 2);
  CHECK(left.split());

  const GSetAction trivial = left_translation_action(pair_groupoid(1));
  CHECK(trivial.apply(0, 0) == 0);

  const GSetAction right = right_translation_action(whole_subgroupoid(g));
  const CosetPartition cosets = right_cosets(whole_subgroupoid(g));
  // orbits {l h^-1} collect morphisms with a common range; cosets a common domain
  std::vector<std::vector<Index>> inverted;
  for (const auto& o : orbit_partition(right)) {
    std::vector<Index> b;
    for (Index l : o) b.push_back(g.inverse(l));
    std::sort(b.begin(), b.end());
    inverted.push_back(b);
  }
  std::sort(inverted.begin(), inverted.end());
  CHECK(inverted == cosets.blocks);

  CHECK(orbit_partition(right_translation_action(identities_subgroupoid(g))).size() == 4);
  CHECK(code_of([&] { right_translation_action(check_subgroupoid(g, {0})); }) == ErrorCode::NotWide);
}

TEST_CASE("orbits and stabilizers") {
  const GSetAction x = fx::xef();
  CHECK(orbit(x, 0) == std::vector<Index>{0, 1});
  CHECK(orbit_partition(x).size() == 1);
  CHECK(stabilizer(x, 0).members() == std::vector<Index>{0});
  CHECK(is_transitive(x));

  const GSetAction point = trivial_action(cyclic_group(2), {0});
  CHECK(stabilizer(point, 0).members() == std::vector<Index>{0, 1});

  const GSetAction two = trivial_action(pair_groupoid(1), {0, 0});
  CHECK_FALSE(is_transitive(two));
  CHECK(stabilizer(two, 1).members() == std::vector<Index>{0});

  const GSetAction empty = GSetAction::validate(pair_groupoid(1), 0, {{}}, {{}});
  CHECK(is_transitive(empty));
}

TEST_CASE("morphisms of G-sets") {
  const GSetAction x = fx::xef();
  CHECK(check_morphism({0, 1}, x, x).kind == MorphismKind::Iso);
  const MorphismClass constant = check_morphism({0, 0}, x, x);
  CHECK(constant.kind == MorphismKind::NotMorphism);
  CHECK_FALSE(constant.witness.empty());
  CHECK(code_of([&] { make_morphism(x, x, {1, 0}); }) == ErrorCode::NotMorphism);

  const GSetAction two = fx::xef_copies(2);
  CHECK(check_morphism({0, 1, 0, 1}, two, x).kind == MorphismKind::Epi);
  CHECK(check_morphism({2, 3}, x, two).kind == MorphismKind::Mono);

  const GSetMorphism in = make_morphism(x, two, {2, 3});
  const GSetMorphism out = make_morphism(two, x, {0, 1, 0, 1});
  CHECK(compose(out, in).kind.kind == MorphismKind::Iso);
}

TEST_CASE("invariant subsets") {
  const GSetAction x = fx::xef();
  CHECK(is_invariant(x, {0, 1}).ok);
  const Verdict single = is_invariant(x, {0});
  CHECK_FALSE(single.ok);
  CHECK_FALSE(single.witness.empty());
  CHECK(code_of([&] { restrict_action(x, {0}); }) == ErrorCode::NotInvariant);

  const GSetAction two = fx::xef_copies(2);
  const SubGSet sub = restrict_action(two, {2, 3});
  CHECK(sub.action.carrier_size() == 2);
  CHECK(sub.embedding == std::vector<Index>{2, 3});
  CHECK(inclusion_morphism(two, sub).kind.kind == MorphismKind::Mono);
}

TEST_CASE("bisets") {
  const FiniteGroupoid g = fx::pair2();
  const BiSet t = fx::translation_biset(whole_subgroupoid(g));
  CHECK(t.split());
  for (Index k = 0; k < g.size(); ++k) {
    const RestrictedAction r = restricted_action(t, k);
    CHECK(r.target.action.carrier_size() == 2);
    CHECK(r.beta_class.kind == MorphismKind::Iso);
  }

  const OrbitGSet o = orbit_gset(t);
  CHECK(o.orbits.size() == 2);
  CHECK(o.projection.kind.kind == MorphismKind::Epi);

  const BiSet ids = fx::translation_biset(identities_subgroupoid(g));
  CHECK(orbit_gset(ids).orbits.size() == 4);

  // carriers of different sizes
  const auto clash = code_of([&] { BiSet::validate(left_translation_action(g), fx::xef()); });
  CHECK(clash.has_value());
}

TEST_CASE("fully faithful actions") {
  const FiniteGroupoid g = fx::pair2();
  CHECK(is_fully_faithful(right_translation_action(whole_subgroupoid(g))).ok);
  CHECK_FALSE(is_fully_faithful(trivial_action(cyclic_group(2), {0})).ok);
  CHECK(is_fully_faithful(trivial_action(pair_groupoid(1), {0, 0})).ok);
  CHECK(is_fully_faithful(fx::xef()).ok);
}

TEST_CASE("partial bijections") {
  const PartialBijections one = partial_bijection_groupoid(trivial_action(pair_groupoid(1), {0}));
  // invariant subsets: {} and {0}; morphisms: the two identities
  CHECK(one.object_subsets.size() == 2);
  CHECK(one.groupoid.size() == 2);

  const PartialBijections p = partial_bijection_groupoid(fx::xef());
  CHECK(p.object_subsets.size() == 2);
  CHECK(p.groupoid.size() == 2);
  CHECK(is_fully_faithful(p.action).ok);

  const PartialBijections two = partial_bijection_groupoid(fx::xef_copies(2));
  // invariant subsets: {}, copy 0, copy 1, both; automorphisms of the whole swap copies
  CHECK(two.object_subsets.size() == 4);
  CHECK(two.groupoid.size() == 1 + 4 + 2);

  CHECK(code_of([] { partial_bijection_groupoid(fx::xef_copies(5)); }) == ErrorCode::TooLarge);
}
