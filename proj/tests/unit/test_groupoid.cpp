#include <doctest.h>

#include "../support/errors.hpp"
#include "../support/fixtures.hpp"

#include <gsm/groupoid.hpp>

using namespace gsm;

using fx::code_of;

TEST_CASE("trivial groupoid validates") {
  GroupoidTables t;
  t.object_names = {"o"};
  t.morphism_names = {"1"};
  t.dom = {0};
  t.ran = {0};
  t.identity = {0};
  t.inverse = {0};
  t.comp = {0};
  const FiniteGroupoid g = FiniteGroupoid::validate(t);
  CHECK(g.size() == 1);
  CHECK(g.object_count() == 1);
}

TEST_CASE("pair groupoid tables") {
  const FiniteGroupoid g = fx::pair2();
  CHECK(g.size() == 4);
  CHECK(g.object_count() == 2);
  CHECK(g.morphism_name(1) == "e->f");
  CHECK(g.dom(1) == 0);
  CHECK(g.ran(1) == 1);
  CHECK(g.inverse(1) == 2);
  CHECK(g.compose(1, 2) == 3);
  CHECK(g.compose(2, 1) == 0);
  CHECK(g.compose(1, 1) == kNone);

  // re-validating the raw tables gives the same groupoid
  CHECK(FiniteGroupoid::validate(g.tables()) == g);

  const FiniteGroupoid g3 = pair_groupoid(3);
  CHECK(g3.size() == 9);
  for (Index e = 0; e < 3; ++e) CHECK(isotropy_group(g3, e).members().size() == 1);
  CHECK(pair_groupoid(1).size() == 1);
  CHECK(code_of([] { pair_groupoid(0); }) == ErrorCode::Empty);
}

TEST_CASE("corrupted composition tables are rejected") {
  GroupoidTables t = fx::pair2().tables();
  // (e->f)(f->e) should be id_f; claim id_e instead
  t.comp[static_cast<size_t>(1 * 4 + 2)] = 0;
  CHECK(code_of([&] { FiniteGroupoid::validate(t); }) == ErrorCode::CompDomain);

  t = fx::pair2().tables();
  t.inverse[1] = 1;
  CHECK(code_of([&] { FiniteGroupoid::validate(t); }) == ErrorCode::Inverse);

  t = fx::pair2().tables();
  t.identity[0] = 1;
  CHECK_THROWS_AS(FiniteGroupoid::validate(t), Error);
}

TEST_CASE("groups and unions") {
  const FiniteGroupoid z2 = cyclic_group(2);
  CHECK(z2.object_count() == 1);
  CHECK(z2.size() == 2);

  const FiniteGroupoid u = disjoint_union(z2, fx::pair2());
  CHECK(u.object_count() == 3);
  CHECK(u.size() == 6);
  CHECK(isotropy_group(u, 0).members().size() == 2);
  CHECK(isotropy_group(u, 1).members().size() == 1);

  const FiniteGroupoid triv = pair_groupoid(1);
  CHECK(disjoint_union(triv, triv).object_count() == 2);

  CHECK(code_of([] { group_as_groupoid({{0, 1}, {1, 1}}); }) == ErrorCode::NotGroup);

  // Klein four as a table
  const FiniteGroupoid v4 = group_as_groupoid({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(v4.size() == 4);
  for (Index g = 0; g < 4; ++g) CHECK(v4.inverse(g) == g);

  const FiniteGroupoid p = product(fx::pair2(), z2);
  CHECK(p.size() == 8);
  CHECK(p.object_count() == 2);
}

TEST_CASE("isotropy and fibers") {
  const FiniteGroupoid g = fx::pair2();
  CHECK(isotropy_group(g, 0).members() == std::vector<Index>{0});
  CHECK(isotropy_group(cyclic_group(2), 0).members() == std::vector<Index>{0, 1});
  CHECK(code_of([&] { isotropy_group(g, 5); }) == ErrorCode::NoObject);

  const Fibers f = fibers(g, 0);
  CHECK(f.from == std::vector<Index>{0, 1});
  CHECK(f.to == std::vector<Index>{0, 2});
  const Fibers t = fibers(pair_groupoid(1), 0);
  CHECK(t.from == std::vector<Index>{0});
  CHECK(t.to == std::vector<Index>{0});
}

TEST_CASE("subgroupoids") {
  const FiniteGroupoid g = fx::pair2();
  CHECK(identities_subgroupoid(g).wide());
  CHECK(whole_subgroupoid(g).wide());

  const SubgroupoidView e_only = check_subgroupoid(g, {0});
  CHECK_FALSE(e_only.wide());
  CHECK(e_only.as_groupoid().size() == 1);
  CHECK(e_only.object_embedding() == std::vector<Index>{0});

  CHECK(code_of([&] { check_subgroupoid(g, {1}); }) == ErrorCode::NotClosed);
  CHECK(code_of([&] { check_subgroupoid(g, {}); }) == ErrorCode::Empty);
}

TEST_CASE("right cosets") {
  const FiniteGroupoid g = fx::pair2();
  const CosetPartition whole = right_cosets(whole_subgroupoid(g));
  REQUIRE(whole.blocks.size() == 2);
  CHECK(whole.blocks[0] == g.morphisms_from(0));
  CHECK(whole.blocks[1] == g.morphisms_from(1));

  const CosetPartition ids = right_cosets(identities_subgroupoid(g));
  CHECK(ids.blocks.size() == 4);
  for (const auto& b : ids.blocks) CHECK(b.size() == 1);

  CHECK(code_of([&] { right_cosets(check_subgroupoid(g, {0})); }) == ErrorCode::NotWide);
}
