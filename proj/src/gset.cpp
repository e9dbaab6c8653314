#include <gsm/error.hpp>
#include <gsm/gset.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace gsm {

namespace {

size_t sz(Index i) { return static_cast<size_t>(i); }

std::string names_of(const GSetAction& a, const std::vector<Index>& points) {
  std::string s = "{";
  for (size_t i = 0; i < points.size(); ++i) s += (i ? "," : "") + a.point_name(points[i]);
  return s + "}";
}

}  // namespace

GSetAction GSetAction::validate(FiniteGroupoid groupoid, Index carrier_size,
                                std::vector<std::vector<Index>> fibers,
                                const std::vector<std::vector<Index>>& alpha,
                                std::vector<std::string> point_names) {
  const FiniteGroupoid& g = groupoid;
  const Index n = carrier_size;
  if (n < 0) fail(ErrorCode::Malformed, "negative carrier size");
  if (static_cast<Index>(fibers.size()) != g.object_count())
    fail(ErrorCode::Malformed, "expected one fiber per object");
  if (static_cast<Index>(alpha.size()) != g.size()) fail(ErrorCode::Malformed, "expected one map per morphism");
  if (point_names.empty())
    for (Index x = 0; x < n; ++x) point_names.push_back("x" + std::to_string(x));
  if (static_cast<Index>(point_names.size()) != n) fail(ErrorCode::Malformed, "wrong number of point names");

  GSetAction a;
  a.carrier_size_ = n;
  a.point_names_ = std::move(point_names);
  a.member_.assign(sz(g.object_count() * n), false);
  for (Index e = 0; e < g.object_count(); ++e)
    for (Index x : fibers[sz(e)]) {
      if (x < 0 || x >= n) fail(ErrorCode::Malformed, "fiber point out of range");
      if (a.member_[sz(e * n + x)])
        fail(ErrorCode::Malformed, "point " + a.point_names_[sz(x)] + " repeated in fiber " + g.object_name(e));
      a.member_[sz(e * n + x)] = true;
    }

  a.table_.assign(sz(g.size() * n), kNone);
  for (Index m = 0; m < g.size(); ++m) {
    const std::vector<Index>& src = fibers[sz(g.dom(m))];
    const std::vector<Index>& images = alpha[sz(m)];
    if (images.size() != src.size())
      fail(ErrorCode::NotBijective, "alpha_" + g.morphism_name(m) + " is not total on X_" + g.object_name(g.dom(m)));
    std::vector<bool> hit(sz(n), false);
    for (size_t i = 0; i < src.size(); ++i) {
      const Index y = images[i];
      if (y < 0 || y >= n || !a.member_[sz(g.ran(m) * n + y)])
        fail(ErrorCode::NotBijective, "alpha_" + g.morphism_name(m) + "(" + a.point_names_[sz(src[i])] +
                                          ") is not in X_" + g.object_name(g.ran(m)));
      if (hit[sz(y)])
        fail(ErrorCode::NotBijective, "alpha_" + g.morphism_name(m) + " is not injective at " + a.point_names_[sz(y)]);
      hit[sz(y)] = true;
      a.table_[sz(m * n + src[i])] = y;
    }
    if (fibers[sz(g.ran(m))].size() != src.size())
      fail(ErrorCode::NotBijective, "alpha_" + g.morphism_name(m) + " is not surjective");
  }

  auto apply = [&](Index m, Index x) { return a.table_[sz(m * n + x)]; };
  for (Index e = 0; e < g.object_count(); ++e)
    for (Index x : fibers[sz(e)])
      if (apply(g.identity(e), x) != x)
        fail(ErrorCode::IdentityAction, "alpha_" + g.morphism_name(g.identity(e)) + " moves " + a.point_names_[sz(x)]);

  for (Index p = 0; p < g.size(); ++p)
    for (Index q = 0; q < g.size(); ++q) {
      const Index pq = g.compose(p, q);
      if (pq == kNone) continue;
      for (Index x : fibers[sz(g.dom(q))])
        if (apply(p, apply(q, x)) != apply(pq, x))
          fail(ErrorCode::Cocycle, "alpha_" + g.morphism_name(p) + " alpha_" + g.morphism_name(q) + " != alpha_" +
                                       g.morphism_name(pq) + " at " + a.point_names_[sz(x)]);
    }

  a.object_of_.assign(sz(n), kNone);
  a.split_ = true;
  for (Index x = 0; x < n; ++x) {
    Index count = 0;
    for (Index e = 0; e < g.object_count(); ++e)
      if (a.member_[sz(e * n + x)]) {
        a.object_of_[sz(x)] = e;
        ++count;
      }
    if (count != 1) a.split_ = false;
  }
  for (auto& f : fibers) std::sort(f.begin(), f.end());
  a.fibers_ = std::move(fibers);
  a.groupoid_ = std::move(groupoid);
  return a;
}

Index GSetAction::find_point(const std::string& name) const {
  auto it = std::find(point_names_.begin(), point_names_.end(), name);
  return it == point_names_.end() ? kNone : static_cast<Index>(it - point_names_.begin());
}

GSetAction left_translation_action(const FiniteGroupoid& g) {
  std::vector<std::vector<Index>> fibers;
  for (Index e = 0; e < g.object_count(); ++e) fibers.push_back(g.morphisms_to(e));
  std::vector<std::vector<Index>> alpha;
  for (Index m = 0; m < g.size(); ++m) {
    std::vector<Index> images;
    for (Index h : fibers[sz(g.dom(m))]) images.push_back(g.compose(m, h));
    alpha.push_back(std::move(images));
  }
  return GSetAction::validate(g, g.size(), std::move(fibers), alpha, g.tables().morphism_names);
}

GSetAction right_translation_action(const SubgroupoidView& h) {
  if (!h.wide()) fail(ErrorCode::NotWide, "right translation needs a wide subgroupoid");
  const FiniteGroupoid& parent = h.parent();
  const FiniteGroupoid sub = h.as_groupoid();
  const std::vector<Index> objects = h.object_embedding();
  std::vector<std::vector<Index>> fibers;
  for (Index p = 0; p < sub.object_count(); ++p) fibers.push_back(parent.morphisms_from(objects[sz(p)]));
  std::vector<std::vector<Index>> alpha;
  for (Index k = 0; k < sub.size(); ++k) {
    const Index hk = h.members()[sz(k)];
    std::vector<Index> images;
    for (Index l : fibers[sz(sub.dom(k))]) images.push_back(parent.compose(l, parent.inverse(hk)));
    alpha.push_back(std::move(images));
  }
  return GSetAction::validate(sub, parent.size(), std::move(fibers), alpha, parent.tables().morphism_names);
}

GSetAction trivial_action(const FiniteGroupoid& g, const std::vector<Index>& object_of_point) {
  std::vector<std::vector<Index>> fibers(sz(g.object_count()));
  for (size_t x = 0; x < object_of_point.size(); ++x) {
    const Index e = object_of_point[x];
    if (e < 0 || e >= g.object_count()) fail(ErrorCode::NoObject, "point placed on unknown object");
    fibers[sz(e)].push_back(static_cast<Index>(x));
  }
  std::vector<std::vector<Index>> alpha;
  for (Index m = 0; m < g.size(); ++m) alpha.push_back(fibers[sz(g.dom(m))]);
  return GSetAction::validate(g, static_cast<Index>(object_of_point.size()), std::move(fibers), alpha);
}

std::vector<Index> orbit(const GSetAction& action, Index x) {
  if (!action.split()) fail(ErrorCode::NotSplit, "orbits need a split action");
  const FiniteGroupoid& g = action.groupoid();
  std::vector<Index> out;
  for (Index m : g.morphisms_from(action.object_of(x))) out.push_back(action.apply(m, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Index>> orbit_partition(const GSetAction& action) {
  if (!action.split()) fail(ErrorCode::NotSplit, "orbits need a split action");
  std::vector<bool> seen(sz(action.carrier_size()), false);
  std::vector<std::vector<Index>> blocks;
  for (Index x = 0; x < action.carrier_size(); ++x) {
    if (seen[sz(x)]) continue;
    std::vector<Index> o = orbit(action, x);
    for (Index y : o) seen[sz(y)] = true;
    blocks.push_back(std::move(o));
  }
  return blocks;
}

SubgroupoidView stabilizer(const GSetAction& action, Index x) {
  if (!action.split()) fail(ErrorCode::NotSplit, "stabilizers need a split action");
  const FiniteGroupoid& g = action.groupoid();
  const Index e = action.object_of(x);
  std::vector<Index> members;
  for (Index m : g.hom(e, e))
    if (action.apply(m, x) == x) members.push_back(m);
  return check_subgroupoid(g, members);
}

Verdict is_invariant(const GSetAction& action, const std::vector<Index>& subset) {
  std::vector<bool> in(sz(action.carrier_size()), false);
  for (Index x : subset) {
    if (x < 0 || x >= action.carrier_size()) fail(ErrorCode::Malformed, "subset point out of range");
    in[sz(x)] = true;
  }
  const FiniteGroupoid& g = action.groupoid();
  for (Index m = 0; m < g.size(); ++m)
    for (Index x : action.fiber(g.dom(m)))
      if (in[sz(x)] && !in[sz(action.apply(m, x))])
        return Verdict::no("alpha_" + g.morphism_name(m) + "(" + action.point_name(x) + ") = " +
                           action.point_name(action.apply(m, x)) + " leaves the subset");
  return Verdict::yes();
}

Verdict is_fully_faithful(const GSetAction& action) {
  const FiniteGroupoid& g = action.groupoid();
  for (Index m = 0; m < g.size(); ++m) {
    if (g.is_identity(m)) continue;
    for (Index x : action.fiber(g.dom(m)))
      if (action.in_fiber(g.ran(m), x) && action.apply(m, x) == x)
        return Verdict::no(g.morphism_name(m) + " fixes " + action.point_name(x));
  }
  return Verdict::yes();
}

bool is_transitive(const GSetAction& action) {
  if (!action.split()) fail(ErrorCode::NotSplit, "transitivity is defined for split actions");
  return orbit_partition(action).size() <= 1;
}

std::string_view morphism_kind_name(MorphismKind k) {
  switch (k) {
    case MorphismKind::NotMorphism: return "not_morphism";
    case MorphismKind::Morphism: return "morphism";
    case MorphismKind::Mono: return "mono";
    case MorphismKind::Epi: return "epi";
    case MorphismKind::Iso: return "iso";
  }
  return "not_morphism";
}

MorphismClass check_morphism(const std::vector<Index>& map, const GSetAction& src, const GSetAction& dst) {
  auto no = [](std::string w) { return MorphismClass{MorphismKind::NotMorphism, std::move(w)}; };
  if (!(src.groupoid() == dst.groupoid())) return no("source and target are over different groupoids");
  if (static_cast<Index>(map.size()) != src.carrier_size()) return no("map is not total on the source");
  for (Index y : map)
    if (y < 0 || y >= dst.carrier_size()) return no("map value out of range");
  const FiniteGroupoid& g = src.groupoid();
  for (Index e = 0; e < g.object_count(); ++e)
    for (Index x : src.fiber(e))
      if (!dst.in_fiber(e, map[sz(x)]))
        return no("phi(" + src.point_name(x) + ") = " + dst.point_name(map[sz(x)]) + " is not in Z_" + g.object_name(e));
  for (Index m = 0; m < g.size(); ++m)
    for (Index x : src.fiber(g.dom(m)))
      if (map[sz(src.apply(m, x))] != dst.apply(m, map[sz(x)]))
        return no("phi alpha_" + g.morphism_name(m) + " != beta_" + g.morphism_name(m) + " phi at " + src.point_name(x));
  std::vector<bool> hit(sz(dst.carrier_size()), false);
  bool injective = true;
  for (Index y : map) {
    if (hit[sz(y)]) injective = false;
    hit[sz(y)] = true;
  }
  const bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  MorphismKind kind = injective ? (surjective ? MorphismKind::Iso : MorphismKind::Mono)
                                : (surjective ? MorphismKind::Epi : MorphismKind::Morphism);
  return {kind, {}};
}

GSetMorphism make_morphism(GSetAction source, GSetAction target, std::vector<Index> map) {
  MorphismClass c = check_morphism(map, source, target);
  if (!c.is_morphism()) fail(ErrorCode::NotMorphism, c.witness);
  return {std::move(source), std::move(target), std::move(map), std::move(c)};
}

GSetMorphism compose(const GSetMorphism& outer, const GSetMorphism& inner) {
  std::vector<Index> map;
  for (Index y : inner.map) map.push_back(outer.map[sz(y)]);
  return make_morphism(inner.source, outer.target, std::move(map));
}

SubGSet restrict_action(const GSetAction& action, std::vector<Index> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const Verdict inv = is_invariant(action, subset);
  if (!inv) fail(ErrorCode::NotInvariant, inv.witness);
  std::vector<Index> local(sz(action.carrier_size()), kNone);
  for (size_t i = 0; i < subset.size(); ++i) local[sz(subset[i])] = static_cast<Index>(i);
  const FiniteGroupoid& g = action.groupoid();
  std::vector<std::vector<Index>> fibers(sz(g.object_count()));
  for (Index e = 0; e < g.object_count(); ++e)
    for (Index x : action.fiber(e))
      if (local[sz(x)] != kNone) fibers[sz(e)].push_back(local[sz(x)]);
  std::vector<std::vector<Index>> alpha;
  for (Index m = 0; m < g.size(); ++m) {
    std::vector<Index> images;
    for (Index lx : fibers[sz(g.dom(m))]) images.push_back(local[sz(action.apply(m, subset[sz(lx)]))]);
    alpha.push_back(std::move(images));
  }
  std::vector<std::string> names;
  for (Index x : subset) names.push_back(action.point_name(x));
  return {GSetAction::validate(g, static_cast<Index>(subset.size()), std::move(fibers), alpha, std::move(names)),
          std::move(subset)};
}

GSetMorphism inclusion_morphism(const GSetAction& action, const SubGSet& sub) {
  return make_morphism(sub.action, action, sub.embedding);
}

BiSet BiSet::validate(GSetAction g_action, GSetAction k_action) {
  if (g_action.carrier_size() != k_action.carrier_size())
    fail(ErrorCode::DimMismatch, "the two actions live on carriers of different size");
  const FiniteGroupoid& g = g_action.groupoid();
  const FiniteGroupoid& k = k_action.groupoid();
  for (Index p = 0; p < k.object_count(); ++p) {
    const Verdict v = is_invariant(g_action, k_action.fiber(p));
    if (!v) fail(ErrorCode::NotInvariant, "Y_" + k.object_name(p) + " is not G-invariant: " + v.witness);
  }
  for (Index e = 0; e < g.object_count(); ++e) {
    const Verdict v = is_invariant(k_action, g_action.fiber(e));
    if (!v) fail(ErrorCode::NotInvariant, "X_" + g.object_name(e) + " is not K-invariant: " + v.witness);
  }
  for (Index a = 0; a < g.size(); ++a)
    for (Index b = 0; b < k.size(); ++b)
      for (Index x : g_action.fiber(g.dom(a))) {
        if (!k_action.in_fiber(k.dom(b), x)) continue;
        if (g_action.apply(a, k_action.apply(b, x)) != k_action.apply(b, g_action.apply(a, x)))
          fail(ErrorCode::NotCommuting, "alpha_" + g.morphism_name(a) + " beta_" + k.morphism_name(b) +
                                            " != beta alpha at " + g_action.point_name(x));
      }
  return BiSet(std::move(g_action), std::move(k_action));
}

RestrictedAction restricted_action(const BiSet& biset, Index k) {
  const GSetAction& ka = biset.k_action();
  const FiniteGroupoid& kg = ka.groupoid();
  RestrictedAction r{restrict_action(biset.g_action(), ka.fiber(kg.dom(k))),
                     restrict_action(biset.g_action(), ka.fiber(kg.ran(k))),
                     {},
                     {}};
  std::vector<Index> local(sz(biset.carrier_size()), kNone);
  for (size_t i = 0; i < r.target.embedding.size(); ++i) local[sz(r.target.embedding[i])] = static_cast<Index>(i);
  for (Index x : r.source.embedding) r.beta.push_back(local[sz(ka.apply(k, x))]);
  r.beta_class = check_morphism(r.beta, r.source.action, r.target.action);
  return r;
}

OrbitGSet orbit_gset(const BiSet& biset) {
  const GSetAction& ga = biset.g_action();
  const GSetAction& ka = biset.k_action();
  if (!ka.split()) fail(ErrorCode::NotSplitK, "the K-action must be split to form K-orbits");
  const FiniteGroupoid& g = ga.groupoid();

  std::vector<std::vector<Index>> orbits = orbit_partition(ka);
  std::vector<Index> orbit_of(sz(biset.carrier_size()), kNone);
  for (size_t o = 0; o < orbits.size(); ++o)
    for (Index x : orbits[o]) orbit_of[sz(x)] = static_cast<Index>(o);

  std::vector<std::vector<Index>> fibers(sz(g.object_count()));
  for (Index e = 0; e < g.object_count(); ++e) {
    for (Index x : ga.fiber(e)) fibers[sz(e)].push_back(orbit_of[sz(x)]);
    std::sort(fibers[sz(e)].begin(), fibers[sz(e)].end());
    fibers[sz(e)].erase(std::unique(fibers[sz(e)].begin(), fibers[sz(e)].end()), fibers[sz(e)].end());
  }
  std::vector<std::vector<Index>> lambda;
  for (Index m = 0; m < g.size(); ++m) {
    std::vector<Index> images;
    for (Index o : fibers[sz(g.dom(m))]) {
      Index image = kNone;
      for (Index x : orbits[sz(o)]) {
        if (!ga.in_fiber(g.dom(m), x)) continue;
        const Index candidate = orbit_of[sz(ga.apply(m, x))];
        if (image == kNone) image = candidate;
        if (candidate != image)
          fail(ErrorCode::NotCommuting, "lambda_" + g.morphism_name(m) + " depends on the representative of " +
                                            names_of(ka, orbits[sz(o)]));
      }
      images.push_back(image);
    }
    lambda.push_back(std::move(images));
  }
  std::vector<std::string> names;
  for (const auto& o : orbits) names.push_back("o(" + ga.point_name(o.front()) + ")");
  GSetAction action = GSetAction::validate(g, static_cast<Index>(orbits.size()), std::move(fibers), lambda, names);
  GSetMorphism projection = make_morphism(ga, action, orbit_of);
  if (!projection.kind.surjective())
    fail(ErrorCode::NotMorphism, "orbit projection is not an epimorphism");
  return {std::move(orbits), std::move(orbit_of), std::move(action), std::move(projection)};
}

PartialBijections partial_bijection_groupoid(const GSetAction& action, Index limit) {
  if (!action.split()) fail(ErrorCode::NotSplit, "I_G(X) is built for split actions");
  const Index n = action.carrier_size();
  if (n > limit)
    fail(ErrorCode::TooLarge, "carrier has " + std::to_string(n) + " points, limit is " + std::to_string(limit));
  const FiniteGroupoid& g = action.groupoid();

  std::vector<std::vector<Index>> subsets;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<Index> s;
    for (Index x = 0; x < n; ++x)
      if (mask & (1ul << x)) s.push_back(x);
    if (is_invariant(action, s)) subsets.push_back(std::move(s));
  }

  struct Mor {
    Index dom, ran;
    std::vector<Index> map;
  };
  std::vector<Mor> mors;
  for (size_t d = 0; d < subsets.size(); ++d)
    for (size_t r = 0; r < subsets.size(); ++r) {
      if (subsets[d].size() != subsets[r].size()) continue;
      std::vector<Index> image = subsets[r];
      do {
        std::vector<Index> map(sz(n), kNone);
        for (size_t i = 0; i < image.size(); ++i) map[sz(subsets[d][i])] = image[i];
        bool ok = true;
        for (Index e = 0; e < g.object_count() && ok; ++e)
          for (Index x : action.fiber(e))
            if (map[sz(x)] != kNone && !action.in_fiber(e, map[sz(x)])) ok = false;
        for (Index m = 0; m < g.size() && ok; ++m)
          for (Index x : action.fiber(g.dom(m)))
            if (map[sz(x)] != kNone && map[sz(action.apply(m, x))] != action.apply(m, map[sz(x)])) ok = false;
        if (ok) mors.push_back({static_cast<Index>(d), static_cast<Index>(r), std::move(map)});
      } while (std::next_permutation(image.begin(), image.end()));
    }

  std::map<std::vector<Index>, Index> index_of;
  for (size_t i = 0; i < mors.size(); ++i) index_of[mors[i].map] = static_cast<Index>(i);
  const Index count = static_cast<Index>(mors.size());

  GroupoidTables t;
  for (const auto& s : subsets) t.object_names.push_back(names_of(action, s));
  for (const auto& s : subsets) {
    std::vector<Index> id(sz(n), kNone);
    for (Index x : s) id[sz(x)] = x;
    t.identity.push_back(index_of.at(id));
  }
  for (const Mor& m : mors) {
    std::string name = "{";
    bool first = true;
    for (Index x = 0; x < n; ++x)
      if (m.map[sz(x)] != kNone) {
        name += (first ? "" : ",") + action.point_name(x) + "->" + action.point_name(m.map[sz(x)]);
        first = false;
      }
    t.morphism_names.push_back(name + "}");
    t.dom.push_back(m.dom);
    t.ran.push_back(m.ran);
    std::vector<Index> inv(sz(n), kNone);
    for (Index x = 0; x < n; ++x)
      if (m.map[sz(x)] != kNone) inv[sz(m.map[sz(x)])] = x;
    t.inverse.push_back(index_of.at(inv));
  }
  t.comp.assign(sz(count * count), kNone);
  for (Index a = 0; a < count; ++a)
    for (Index b = 0; b < count; ++b) {
      if (mors[sz(a)].dom != mors[sz(b)].ran) continue;
      std::vector<Index> c(sz(n), kNone);
      for (Index x = 0; x < n; ++x)
        if (mors[sz(b)].map[sz(x)] != kNone) c[sz(x)] = mors[sz(a)].map[sz(mors[sz(b)].map[sz(x)])];
      t.comp[sz(a * count + b)] = index_of.at(c);
    }
  FiniteGroupoid ig = FiniteGroupoid::validate(std::move(t));

  std::vector<std::vector<Index>> alpha;
  for (const Mor& m : mors) {
    std::vector<Index> images;
    for (Index x : subsets[sz(m.dom)]) images.push_back(m.map[sz(x)]);
    alpha.push_back(std::move(images));
  }
  std::vector<std::vector<Index>> maps;
  for (Mor& m : mors) maps.push_back(std::move(m.map));
  GSetAction taut = GSetAction::validate(ig, n, subsets, alpha, action.point_names());
  return {std::move(ig), std::move(subsets), std::move(maps), std::move(taut)};
}

}  // namespace gsm
