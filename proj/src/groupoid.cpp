#include <gsm/error.hpp>
#include <gsm/groupoid.hpp>

#include <algorithm>
#include <string>

namespace gsm {

namespace {

std::string pair_witness(const GroupoidTables& t, Index g, Index h) {
  return "(" + t.morphism_names[static_cast<size_t>(g)] + ", " + t.morphism_names[static_cast<size_t>(h)] + ")";
}

void fill_default_names(GroupoidTables& t) {
  if (t.morphism_names.empty())
    for (size_t g = 0; g < t.dom.size(); ++g) t.morphism_names.push_back("m" + std::to_string(g));
  if (t.object_names.empty())
    for (size_t e = 0; e < t.identity.size(); ++e) t.object_names.push_back("e" + std::to_string(e));
}

}  // namespace

FiniteGroupoid FiniteGroupoid::validate(GroupoidTables t) {
  fill_default_names(t);
  const Index n = static_cast<Index>(t.dom.size());
  const Index m = static_cast<Index>(t.identity.size());
  auto sz = [](Index k) { return static_cast<size_t>(k); };

  if (t.ran.size() != sz(n) || t.inverse.size() != sz(n) || t.comp.size() != sz(n * n) ||
      t.morphism_names.size() != sz(n) || t.object_names.size() != sz(m))
    fail(ErrorCode::Malformed, "groupoid tables have inconsistent sizes");
  for (Index g = 0; g < n; ++g) {
    if (t.dom[sz(g)] < 0 || t.dom[sz(g)] >= m || t.ran[sz(g)] < 0 || t.ran[sz(g)] >= m)
      fail(ErrorCode::Malformed, "morphism " + t.morphism_names[sz(g)] + " has an unknown endpoint");
    if (t.inverse[sz(g)] < 0 || t.inverse[sz(g)] >= n)
      fail(ErrorCode::Inverse, "morphism " + t.morphism_names[sz(g)] + " has no inverse");
  }
  for (Index e = 0; e < m; ++e) {
    const Index id = t.identity[sz(e)];
    if (id < 0 || id >= n || t.dom[sz(id)] != e || t.ran[sz(id)] != e)
      fail(ErrorCode::Identity, "identity of object " + t.object_names[sz(e)] + " is not an endomorphism of it");
  }

  auto comp = [&](Index g, Index h) { return t.comp[sz(g * n + h)]; };

  for (Index g = 0; g < n; ++g) {
    for (Index h = 0; h < n; ++h) {
      const Index gh = comp(g, h);
      if (t.dom[sz(g)] == t.ran[sz(h)]) {
        if (gh < 0 || gh >= n)
          fail(ErrorCode::CompDomain, "composable pair " + pair_witness(t, g, h) + " has no product");
        if (t.dom[sz(gh)] != t.dom[sz(h)] || t.ran[sz(gh)] != t.ran[sz(g)])
          fail(ErrorCode::CompDomain, "product of " + pair_witness(t, g, h) + " = " +
                                          t.morphism_names[sz(gh)] + " has wrong domain or range");
      } else if (gh != kNone) {
        fail(ErrorCode::CompDomain, "non-composable pair " + pair_witness(t, g, h) + " has a product");
      }
    }
  }

  for (Index g = 0; g < n; ++g) {
    if (comp(t.identity[sz(t.ran[sz(g)])], g) != g || comp(g, t.identity[sz(t.dom[sz(g)])]) != g)
      fail(ErrorCode::Identity, "identity law fails at " + t.morphism_names[sz(g)]);
  }

  for (Index g = 0; g < n; ++g)
    for (Index h = 0; h < n; ++h) {
      const Index gh = comp(g, h);
      if (gh == kNone) continue;
      for (Index l = 0; l < n; ++l) {
        const Index hl = comp(h, l);
        if (hl == kNone) continue;
        if (comp(gh, l) != comp(g, hl))
          fail(ErrorCode::Assoc, "(gh)l != g(hl) at (" + t.morphism_names[sz(g)] + ", " +
                                     t.morphism_names[sz(h)] + ", " + t.morphism_names[sz(l)] + ")");
      }
    }

  for (Index g = 0; g < n; ++g) {
    const Index gi = t.inverse[sz(g)];
    if (comp(g, gi) != t.identity[sz(t.ran[sz(g)])] || comp(gi, g) != t.identity[sz(t.dom[sz(g)])] ||
        t.inverse[sz(gi)] != g)
      fail(ErrorCode::Inverse, "inverse law fails at " + t.morphism_names[sz(g)]);
  }
  return FiniteGroupoid(std::move(t));
}

Index FiniteGroupoid::find_morphism(const std::string& name) const {
  auto it = std::find(t_.morphism_names.begin(), t_.morphism_names.end(), name);
  return it == t_.morphism_names.end() ? kNone : static_cast<Index>(it - t_.morphism_names.begin());
}

Index FiniteGroupoid::find_object(const std::string& name) const {
  auto it = std::find(t_.object_names.begin(), t_.object_names.end(), name);
  return it == t_.object_names.end() ? kNone : static_cast<Index>(it - t_.object_names.begin());
}

std::vector<Index> FiniteGroupoid::morphisms_from(Index e) const {
  std::vector<Index> out;
  for (Index g = 0; g < size(); ++g)
    if (dom(g) == e) out.push_back(g);
  return out;
}

std::vector<Index> FiniteGroupoid::morphisms_to(Index e) const {
  std::vector<Index> out;
  for (Index g = 0; g < size(); ++g)
    if (ran(g) == e) out.push_back(g);
  return out;
}

std::vector<Index> FiniteGroupoid::hom(Index e, Index f) const {
  std::vector<Index> out;
  for (Index g = 0; g < size(); ++g)
    if (dom(g) == e && ran(g) == f) out.push_back(g);
  return out;
}

FiniteGroupoid pair_groupoid(Index n, std::vector<std::string> names) {
  if (n <= 0) fail(ErrorCode::Empty, "pair groupoid needs at least one object");
  if (names.empty())
    for (Index e = 0; e < n; ++e) names.push_back("e" + std::to_string(e));
  if (static_cast<Index>(names.size()) != n) fail(ErrorCode::Malformed, "pair groupoid: wrong number of names");

  // morphism a -> b has index a * n + b
  GroupoidTables t;
  t.object_names = names;
  const Index count = n * n;
  t.comp.assign(static_cast<size_t>(count * count), kNone);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      t.morphism_names.push_back(a == b ? "id_" + names[static_cast<size_t>(a)]
                                        : names[static_cast<size_t>(a)] + "->" + names[static_cast<size_t>(b)]);
      t.dom.push_back(a);
      t.ran.push_back(b);
      t.inverse.push_back(b * n + a);
    }
  for (Index e = 0; e < n; ++e) t.identity.push_back(e * n + e);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        const Index g = b * n + c;  // b -> c
        const Index h = a * n + b;  // a -> b
        t.comp[static_cast<size_t>(g * count + h)] = a * n + c;
      }
  return FiniteGroupoid::validate(std::move(t));
}

FiniteGroupoid group_as_groupoid(const std::vector<std::vector<Index>>& table,
                                 std::vector<std::string> element_names, std::string object_name) {
  const Index k = static_cast<Index>(table.size());
  if (k == 0) fail(ErrorCode::NotGroup, "empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<Index>(row.size()) != k) fail(ErrorCode::NotGroup, "multiplication table is not square");
    for (Index v : row)
      if (v < 0 || v >= k) fail(ErrorCode::NotGroup, "table entry out of range");
  }
  auto mul = [&](Index a, Index b) { return table[static_cast<size_t>(a)][static_cast<size_t>(b)]; };
  Index unit = kNone;
  for (Index u = 0; u < k && unit == kNone; ++u) {
    bool ok = true;
    for (Index x = 0; x < k && ok; ++x) ok = mul(u, x) == x && mul(x, u) == x;
    if (ok) unit = u;
  }
  if (unit == kNone) fail(ErrorCode::NotGroup, "no identity element");
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b)
      for (Index c = 0; c < k; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail(ErrorCode::NotGroup, "not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                                        ", " + std::to_string(c) + ")");
  if (element_names.empty())
    for (Index a = 0; a < k; ++a) element_names.push_back(std::to_string(a));
  if (static_cast<Index>(element_names.size()) != k) fail(ErrorCode::Malformed, "wrong number of element names");

  GroupoidTables t;
  t.object_names = {std::move(object_name)};
  t.morphism_names = std::move(element_names);
  t.dom.assign(static_cast<size_t>(k), 0);
  t.ran.assign(static_cast<size_t>(k), 0);
  t.identity = {unit};
  for (Index a = 0; a < k; ++a) {
    Index inv = kNone;
    for (Index b = 0; b < k && inv == kNone; ++b)
      if (mul(a, b) == unit && mul(b, a) == unit) inv = b;
    if (inv == kNone) fail(ErrorCode::NotGroup, "element " + t.morphism_names[static_cast<size_t>(a)] + " has no inverse");
    t.inverse.push_back(inv);
  }
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) t.comp.push_back(mul(a, b));
  return FiniteGroupoid::validate(std::move(t));
}

FiniteGroupoid cyclic_group(Index n) {
  std::vector<std::vector<Index>> table(static_cast<size_t>(n), std::vector<Index>(static_cast<size_t>(n)));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return group_as_groupoid(table);
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const GroupoidTables& ta = a.tables();
  const GroupoidTables& tb = b.tables();
  const Index na = a.size(), nb = b.size(), n = na + nb;
  const Index oa = a.object_count();
  GroupoidTables t;
  t.object_names = ta.object_names;
  t.object_names.insert(t.object_names.end(), tb.object_names.begin(), tb.object_names.end());
  t.morphism_names = ta.morphism_names;
  t.morphism_names.insert(t.morphism_names.end(), tb.morphism_names.begin(), tb.morphism_names.end());
  for (Index g = 0; g < na; ++g) {
    t.dom.push_back(a.dom(g));
    t.ran.push_back(a.ran(g));
    t.inverse.push_back(a.inverse(g));
  }
  for (Index g = 0; g < nb; ++g) {
    t.dom.push_back(b.dom(g) + oa);
    t.ran.push_back(b.ran(g) + oa);
    t.inverse.push_back(b.inverse(g) + na);
  }
  for (Index e = 0; e < a.object_count(); ++e) t.identity.push_back(a.identity(e));
  for (Index e = 0; e < b.object_count(); ++e) t.identity.push_back(b.identity(e) + na);
  t.comp.assign(static_cast<size_t>(n * n), kNone);
  for (Index g = 0; g < na; ++g)
    for (Index h = 0; h < na; ++h) t.comp[static_cast<size_t>(g * n + h)] = a.compose(g, h);
  for (Index g = 0; g < nb; ++g)
    for (Index h = 0; h < nb; ++h) {
      const Index gh = b.compose(g, h);
      t.comp[static_cast<size_t>((g + na) * n + h + na)] = gh == kNone ? kNone : gh + na;
    }
  return FiniteGroupoid::validate(std::move(t));
}

FiniteGroupoid product(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const Index na = a.size(), nb = b.size(), n = na * nb;
  const Index ob = b.object_count();
  GroupoidTables t;
  for (Index e = 0; e < a.object_count(); ++e)
    for (Index p = 0; p < ob; ++p) {
      t.object_names.push_back("(" + a.object_name(e) + "," + b.object_name(p) + ")");
      t.identity.push_back(a.identity(e) * nb + b.identity(p));
    }
  for (Index g = 0; g < na; ++g)
    for (Index k = 0; k < nb; ++k) {
      t.morphism_names.push_back("(" + a.morphism_name(g) + "," + b.morphism_name(k) + ")");
      t.dom.push_back(a.dom(g) * ob + b.dom(k));
      t.ran.push_back(a.ran(g) * ob + b.ran(k));
      t.inverse.push_back(a.inverse(g) * nb + b.inverse(k));
    }
  t.comp.assign(static_cast<size_t>(n * n), kNone);
  for (Index g = 0; g < na; ++g)
    for (Index k = 0; k < nb; ++k)
      for (Index h = 0; h < na; ++h)
        for (Index l = 0; l < nb; ++l) {
          const Index gh = a.compose(g, h), kl = b.compose(k, l);
          if (gh == kNone || kl == kNone) continue;
          t.comp[static_cast<size_t>((g * nb + k) * n + h * nb + l)] = gh * nb + kl;
        }
  return FiniteGroupoid::validate(std::move(t));
}

SubgroupoidView check_subgroupoid(const FiniteGroupoid& g, std::vector<Index> members) {
  if (members.empty()) fail(ErrorCode::Empty, "subgroupoid must be nonempty");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<bool> mask(static_cast<size_t>(g.size()), false);
  for (Index m : members) {
    if (m < 0 || m >= g.size()) fail(ErrorCode::Malformed, "subgroupoid member out of range");
    mask[static_cast<size_t>(m)] = true;
  }
  for (Index a : members) {
    if (!mask[static_cast<size_t>(g.inverse(a))])
      fail(ErrorCode::NotClosed, "inverse of " + g.morphism_name(a) + " is missing");
    for (Index b : members) {
      const Index ab = g.compose(a, b);
      if (ab != kNone && !mask[static_cast<size_t>(ab)])
        fail(ErrorCode::NotClosed, "product of (" + g.morphism_name(a) + ", " + g.morphism_name(b) + ") is missing");
    }
  }
  bool wide = true;
  for (Index e = 0; e < g.object_count(); ++e) wide = wide && mask[static_cast<size_t>(g.identity(e))];
  return SubgroupoidView(g, std::move(members), std::move(mask), wide);
}

std::vector<Index> SubgroupoidView::object_embedding() const {
  std::vector<Index> objects;
  for (Index e = 0; e < parent_.object_count(); ++e)
    if (contains(parent_.identity(e))) objects.push_back(e);
  return objects;
}

FiniteGroupoid SubgroupoidView::as_groupoid() const {
  const std::vector<Index> objects = object_embedding();
  std::vector<Index> object_index(static_cast<size_t>(parent_.object_count()), kNone);
  for (size_t i = 0; i < objects.size(); ++i) object_index[static_cast<size_t>(objects[i])] = static_cast<Index>(i);
  std::vector<Index> local(static_cast<size_t>(parent_.size()), kNone);
  for (size_t i = 0; i < members_.size(); ++i) local[static_cast<size_t>(members_[i])] = static_cast<Index>(i);

  const Index n = static_cast<Index>(members_.size());
  GroupoidTables t;
  for (Index e : objects) {
    t.object_names.push_back(parent_.object_name(e));
    t.identity.push_back(local[static_cast<size_t>(parent_.identity(e))]);
  }
  for (Index m : members_) {
    t.morphism_names.push_back(parent_.morphism_name(m));
    t.dom.push_back(object_index[static_cast<size_t>(parent_.dom(m))]);
    t.ran.push_back(object_index[static_cast<size_t>(parent_.ran(m))]);
    t.inverse.push_back(local[static_cast<size_t>(parent_.inverse(m))]);
  }
  t.comp.assign(static_cast<size_t>(n * n), kNone);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = parent_.compose(members_[static_cast<size_t>(a)], members_[static_cast<size_t>(b)]);
      if (ab != kNone) t.comp[static_cast<size_t>(a * n + b)] = local[static_cast<size_t>(ab)];
    }
  return FiniteGroupoid::validate(std::move(t));
}

SubgroupoidView isotropy_group(const FiniteGroupoid& g, Index e) {
  if (e < 0 || e >= g.object_count()) fail(ErrorCode::NoObject, "object index " + std::to_string(e));
  SubgroupoidView view = check_subgroupoid(g, g.hom(e, e));
  // Re-validate as an abstract group.
  const std::vector<Index>& mem = view.members();
  std::vector<Index> local(static_cast<size_t>(g.size()), kNone);
  for (size_t i = 0; i < mem.size(); ++i) local[static_cast<size_t>(mem[i])] = static_cast<Index>(i);
  std::vector<std::vector<Index>> table(mem.size(), std::vector<Index>(mem.size()));
  for (size_t a = 0; a < mem.size(); ++a)
    for (size_t b = 0; b < mem.size(); ++b) table[a][b] = local[static_cast<size_t>(g.compose(mem[a], mem[b]))];
  group_as_groupoid(table);
  return view;
}

Fibers fibers(const FiniteGroupoid& g, Index e) {
  if (e < 0 || e >= g.object_count()) fail(ErrorCode::NoObject, "object index " + std::to_string(e));
  return {g.morphisms_from(e), g.morphisms_to(e)};
}

SubgroupoidView identities_subgroupoid(const FiniteGroupoid& g) {
  std::vector<Index> ids;
  for (Index e = 0; e < g.object_count(); ++e) ids.push_back(g.identity(e));
  return check_subgroupoid(g, ids);
}

SubgroupoidView whole_subgroupoid(const FiniteGroupoid& g) {
  std::vector<Index> all;
  for (Index m = 0; m < g.size(); ++m) all.push_back(m);
  return check_subgroupoid(g, all);
}

CosetPartition right_cosets(const SubgroupoidView& h) {
  if (!h.wide()) fail(ErrorCode::NotWide, "coset relation needs a wide subgroupoid");
  const FiniteGroupoid& g = h.parent();
  auto related = [&](Index a, Index b) {
    return g.dom(a) == g.dom(b) && h.contains(g.compose(a, g.inverse(b)));
  };
  CosetPartition p;
  p.block_of.assign(static_cast<size_t>(g.size()), kNone);
  for (Index a = 0; a < g.size(); ++a) {
    if (p.block_of[static_cast<size_t>(a)] != kNone) continue;
    const Index id = static_cast<Index>(p.blocks.size());
    std::vector<Index> block;
    for (Index b = a; b < g.size(); ++b)
      if (related(a, b)) {
        if (p.block_of[static_cast<size_t>(b)] != kNone)
          fail(ErrorCode::NotClosed, "coset relation is not an equivalence at " + g.morphism_name(b));
        block.push_back(b);
        p.block_of[static_cast<size_t>(b)] = id;
      }
    p.blocks.push_back(std::move(block));
  }
  for (Index a = 0; a < g.size(); ++a)
    for (Index b = 0; b < g.size(); ++b)
      if (related(a, b) != (p.block_of[static_cast<size_t>(a)] == p.block_of[static_cast<size_t>(b)]))
        fail(ErrorCode::NotClosed, "coset blocks are not equivalence classes at (" + g.morphism_name(a) + ", " +
                                       g.morphism_name(b) + ")");
  return p;
}

}  // namespace gsm
