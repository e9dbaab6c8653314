#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace fx {

namespace {

std::vector<Term> t(Index i) { return {{i, Scalar(1)}}; }

std::vector<Index> iota(Index n) {
  std::vector<Index> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

std::vector<Index> permutation(std::mt19937_64& rng, Index n) {
  std::vector<Index> p = iota(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// The action a on S, extended to S x T by acting on the first factor.
GSetAction on_first(const GSetAction& a, Index nt) {
  const FiniteGroupoid& g = a.groupoid();
  std::vector<std::vector<Index>> fibers(static_cast<size_t>(g.object_count()));
  for (Index e = 0; e < g.object_count(); ++e)
    for (Index s : a.fiber(e))
      for (Index k = 0; k < nt; ++k) fibers[static_cast<size_t>(e)].push_back(s * nt + k);
  std::vector<std::vector<Index>> alpha(static_cast<size_t>(g.size()));
  for (Index m = 0; m < g.size(); ++m)
    for (Index s : a.fiber(g.dom(m)))
      for (Index k = 0; k < nt; ++k) alpha[static_cast<size_t>(m)].push_back(a.apply(m, s) * nt + k);
  return GSetAction::validate(g, a.carrier_size() * nt, std::move(fibers), alpha);
}

// The action b on T, extended to S x T by acting on the second factor.
GSetAction on_second(const GSetAction& b, Index ns) {
  const FiniteGroupoid& k = b.groupoid();
  const Index nt = b.carrier_size();
  std::vector<std::vector<Index>> fibers(static_cast<size_t>(k.object_count()));
  for (Index p = 0; p < k.object_count(); ++p)
    for (Index s = 0; s < ns; ++s)
      for (Index y : b.fiber(p)) fibers[static_cast<size_t>(p)].push_back(s * nt + y);
  std::vector<std::vector<Index>> beta(static_cast<size_t>(k.size()));
  for (Index m = 0; m < k.size(); ++m)
    for (Index s = 0; s < ns; ++s)
      for (Index y : b.fiber(k.dom(m))) beta[static_cast<size_t>(m)].push_back(s * nt + b.apply(m, y));
  return GSetAction::validate(k, ns * nt, std::move(fibers), beta);
}

GSetAction random_involution_set(std::mt19937_64& rng, Index n) {
  std::vector<Index> order = permutation(rng, n);
  std::vector<Index> tau = iota(n);
  std::bernoulli_distribution coin(0.6);
  for (size_t i = 0; i + 1 < order.size(); i += 2)
    if (coin(rng)) std::swap(tau[static_cast<size_t>(order[i])], tau[static_cast<size_t>(order[i + 1])]);
  return GSetAction::validate(cyclic_group(2), n, {iota(n)}, {iota(n), tau});
}

}  // namespace

FiniteGroupoid pair2() { return pair_groupoid(2, {"e", "f"}); }

GradedAlgebra m2() {
  // E11 E12 E21 E22 as indices 0..3; Eij Ejk = Eik.
  std::vector<std::vector<Term>> p(16);
  auto at = [&](Index i, Index j) -> std::vector<Term>& { return p[static_cast<size_t>(i * 4 + j)]; };
  at(0, 0) = t(0);
  at(0, 1) = t(1);
  at(1, 2) = t(0);
  at(1, 3) = t(1);
  at(2, 0) = t(2);
  at(2, 1) = t(3);
  at(3, 2) = t(2);
  at(3, 3) = t(3);
  Vector unit(4);
  unit << 1, 0, 0, 1;
  auto alg = StructureAlgebra::validate(4, std::move(p), unit, {"E11", "E12", "E21", "E22"});
  return GradedAlgebra::validate(std::move(alg), pair2(), {0, 2, 1, 3});
}

GradedAlgebra qxq() {
  std::vector<std::vector<Term>> p(4);
  p[0] = t(0);
  p[3] = t(1);
  Vector unit(2);
  unit << 1, 1;
  auto alg = StructureAlgebra::validate(2, std::move(p), unit, {"p", "q"});
  return GradedAlgebra::validate(std::move(alg), pair2(), {0, 3});
}

GradedAlgebra kz2() { return groupoid_algebra(cyclic_group(2)); }

GSetAction xef() { return xef_copies(1); }

GSetAction xef_copies(Index n) {
  std::vector<std::vector<Index>> fibers(2);
  std::vector<std::string> names;
  for (Index c = 0; c < n; ++c) {
    fibers[0].push_back(2 * c);
    fibers[1].push_back(2 * c + 1);
    names.push_back(n == 1 ? "x" : "x" + std::to_string(c));
    names.push_back(n == 1 ? "y" : "y" + std::to_string(c));
  }
  // alpha[g] lists images of X_{d(g)} in order; the same table works for every copy.
  std::vector<std::vector<Index>> alpha = {fibers[0], fibers[1], fibers[0], fibers[1]};
  return GSetAction::validate(pair2(), 2 * n, fibers, alpha, names);
}

BiSet translation_biset(const SubgroupoidView& h) {
  return BiSet::validate(left_translation_action(h.parent()), right_translation_action(h));
}

GSetAction random_pair2_set(std::mt19937_64& rng, Index m) {
  const std::vector<Index> sigma = permutation(rng, m);
  std::vector<Index> inv(static_cast<size_t>(m));
  for (Index i = 0; i < m; ++i) inv[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = i;
  std::vector<std::vector<Index>> alpha(4);
  for (Index i = 0; i < m; ++i) {
    alpha[0].push_back(i);
    alpha[1].push_back(m + sigma[static_cast<size_t>(i)]);
    alpha[2].push_back(inv[static_cast<size_t>(i)]);
    alpha[3].push_back(m + i);
  }
  std::vector<Index> fe = iota(m), ff;
  for (Index i = 0; i < m; ++i) ff.push_back(m + i);
  return GSetAction::validate(pair2(), 2 * m, {fe, ff}, alpha);
}

BiSet random_biset(std::mt19937_64& rng) {
  // carriers stay at 8 points or fewer so the duality pipeline is quick
  const Index m = std::uniform_int_distribution<Index>(1, 2)(rng);
  const GSetAction s = random_pair2_set(rng, m);
  GSetAction k = std::bernoulli_distribution(0.5)(rng)
                     ? random_involution_set(rng, std::uniform_int_distribution<Index>(1, m == 1 ? 4 : 2)(rng))
                     : random_pair2_set(rng, m == 1 ? std::uniform_int_distribution<Index>(1, 2)(rng) : 1);
  const Index nt = k.carrier_size();
  return BiSet::validate(on_first(s, nt), on_second(k, s.carrier_size()));
}

std::vector<BisetCase> biset_battery(std::uint64_t seed) {
  const FiniteGroupoid g = pair2();
  const FiniteGroupoid z = cyclic_group(2);
  std::vector<BisetCase> out;
  out.push_back({"translation", translation_biset(whole_subgroupoid(g))});
  out.push_back({"identities-only", translation_biset(identities_subgroupoid(g))});
  out.push_back({"xef-trivial", BiSet::validate(xef(), trivial_action(cyclic_group(1), {0, 0}))});
  out.push_back({"z2-translation", translation_biset(whole_subgroupoid(z)), true});
  out.push_back({"z2-identities", translation_biset(identities_subgroupoid(z)), true});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 4; ++i) out.push_back({"random-" + std::to_string(i), random_biset(rng)});
  return out;
}

std::vector<NamedMorphism> morphism_battery(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const FiniteGroupoid g = pair2();
  const GSetAction x = xef();
  std::vector<NamedMorphism> out;
  out.push_back({"xef-identity", make_morphism(x, x, {0, 1})});

  const GSetAction left = left_translation_action(g);
  std::vector<Index> by_range;
  for (Index h = 0; h < g.size(); ++h) by_range.push_back(g.ran(h));
  out.push_back({"translation-collapse", make_morphism(left, x, by_range)});

  const GSetAction two = xef_copies(2);
  out.push_back({"copy-inclusion", make_morphism(x, two, {0, 1})});
  out.push_back({"fold", make_morphism(two, x, {0, 1, 0, 1})});

  const Index m = 2;
  const GSetAction s = random_pair2_set(rng, m);
  std::vector<Index> collapse;
  for (Index i = 0; i < 2 * m; ++i) collapse.push_back(i < m ? 0 : 1);
  out.push_back({"random-collapse", make_morphism(s, x, collapse)});

  // pi on X_e, transported to X_f along e->f, commutes with the action.
  const std::vector<Index> pi = permutation(rng, m);
  std::vector<Index> auto_map(static_cast<size_t>(2 * m));
  for (Index i = 0; i < m; ++i) {
    const Index img = pi[static_cast<size_t>(i)];
    auto_map[static_cast<size_t>(i)] = img;
    auto_map[static_cast<size_t>(s.apply(1, i))] = s.apply(1, img);
  }
  out.push_back({"random-automorphism", make_morphism(s, s, auto_map)});

  const FiniteGroupoid z = cyclic_group(2);
  const GSetAction reg = left_translation_action(z);
  out.push_back({"z2-collapse", make_morphism(reg, trivial_action(z, {0}), {0, 0}), true});
  out.push_back({"z2-right-multiplication", make_morphism(reg, reg, {1, 0}), true});
  return out;
}

}  // namespace fx
