#include <gsm/runner.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <random>
#include <variant>

namespace gsm {

namespace {

using namespace dsl;

using Built = std::variant<FiniteGroupoid, SubgroupoidView, GradedAlgebra, GSetAction, BiSet, XGradedModule,
                           GSetMorphism>;

struct Entry {
  std::string kind;
  std::optional<Built> value;
  ErrorCode code = ErrorCode::Malformed;
  std::string witness;
  Json summary = Json::object();
};

/// Raised for names that only resolve once structures exist; aborts with exit 2.
struct NameError {
  ErrorCode code;
  std::string message;
};

[[noreturn]] void unresolved(const std::string& what) { throw NameError{ErrorCode::UnresolvedName, what}; }

/// A failed dependency, reported under the dependent task or declaration.
struct DependencyError {
  ErrorCode code;
  std::string witness;
};

class Env {
 public:
  std::map<std::string, Entry> entries;

  template <typename T>
  const T& get(const std::string& name) const {
    const Entry& e = entries.at(name);
    if (!e.value) throw DependencyError{e.code, "declaration '" + name + "' is invalid: " + e.witness};
    return std::get<T>(*e.value);
  }
};

Index morphism_index(const FiniteGroupoid& g, const std::string& name) {
  const Index m = g.find_morphism(name);
  if (m == kNone) unresolved("unknown morphism '" + name + "'");
  return m;
}

Index object_index(const FiniteGroupoid& g, const std::string& name) {
  const Index e = g.find_object(name);
  if (e == kNone) unresolved("unknown object '" + name + "'");
  return e;
}

Index point_index(const GSetAction& a, const std::string& name) {
  const Index x = a.find_point(name);
  if (x == kNone) unresolved("unknown point '" + name + "'");
  return x;
}

Index basis_index(const StructureAlgebra& a, const std::string& name) {
  const Index i = a.find_basis(name);
  if (i == kNone) unresolved("unknown basis element '" + name + "'");
  return i;
}

Vector lincomb_vector(const std::vector<std::string>& basis, const LinComb& c) {
  Vector v = Vector::Zero(static_cast<Index>(basis.size()));
  for (const LinTerm& t : c) {
    auto it = std::find(basis.begin(), basis.end(), t.basis);
    if (it == basis.end()) unresolved("unknown basis element '" + t.basis + "'");
    v(it - basis.begin()) += t.coeff;
  }
  return v;
}

FiniteGroupoid build_groupoid(const GroupoidDecl& d, const Env& env) {
  using K = GroupoidDecl::Kind;
  switch (d.kind) {
    case K::Pair: return pair_groupoid(static_cast<Index>(d.objects.size()), d.objects);
    case K::Cyclic: return cyclic_group(d.order);
    case K::Union: return disjoint_union(env.get<FiniteGroupoid>(d.left), env.get<FiniteGroupoid>(d.right));
    case K::Group: {
      const std::vector<std::string>& elements = d.table.front();
      if (d.table.size() != elements.size()) fail(ErrorCode::Malformed, "group table needs one row per element");
      std::vector<std::vector<Index>> table;
      for (const auto& row : d.table) {
        if (row.size() != elements.size()) fail(ErrorCode::Malformed, "group table rows must have equal length");
        std::vector<Index> r;
        for (const std::string& n : row) {
          auto it = std::find(elements.begin(), elements.end(), n);
          if (it == elements.end()) unresolved("unknown group element '" + n + "'");
          r.push_back(it - elements.begin());
        }
        table.push_back(std::move(r));
      }
      return group_as_groupoid(table, elements);
    }
    case K::Explicit: break;
  }
  GroupoidTables t;
  t.object_names = d.objects;
  auto object = [&](const std::string& n) {
    auto it = std::find(d.objects.begin(), d.objects.end(), n);
    if (it == d.objects.end()) unresolved("unknown object '" + n + "'");
    return static_cast<Index>(it - d.objects.begin());
  };
  for (size_t e = 0; e < d.objects.size(); ++e) {
    t.morphism_names.push_back("id_" + d.objects[e]);
    t.dom.push_back(static_cast<Index>(e));
    t.ran.push_back(static_cast<Index>(e));
    t.identity.push_back(static_cast<Index>(e));
  }
  for (const auto& m : d.mors) {
    t.morphism_names.push_back(m.name);
    t.dom.push_back(object(m.from));
    t.ran.push_back(object(m.to));
  }
  const Index n = static_cast<Index>(t.dom.size());
  auto mor = [&](const std::string& name) {
    auto it = std::find(t.morphism_names.begin(), t.morphism_names.end(), name);
    if (it == t.morphism_names.end()) unresolved("unknown morphism '" + name + "'");
    return static_cast<Index>(it - t.morphism_names.begin());
  };
  t.comp.assign(static_cast<size_t>(n * n), kNone);
  auto at = [n](Index g, Index h) { return static_cast<size_t>(g * n + h); };
  for (Index g = 0; g < n; ++g) {
    t.comp[at(t.identity[static_cast<size_t>(t.ran[static_cast<size_t>(g)])], g)] = g;
    t.comp[at(g, t.identity[static_cast<size_t>(t.dom[static_cast<size_t>(g)])])] = g;
  }
  for (const auto& c : d.comps) {
    Index& slot = t.comp[at(mor(c.g), mor(c.h))];
    if (slot != kNone && slot != mor(c.k)) fail(ErrorCode::Malformed, "composite " + c.g + " " + c.h + " given twice");
    slot = mor(c.k);
  }
  t.inverse.assign(static_cast<size_t>(n), kNone);
  for (Index g = 0; g < n; ++g)
    for (Index h = 0; h < n; ++h)
      if (t.comp[at(g, h)] != kNone && t.comp[at(g, h)] == t.identity[static_cast<size_t>(t.ran[static_cast<size_t>(g)])])
        t.inverse[static_cast<size_t>(g)] = h;
  return FiniteGroupoid::validate(std::move(t));
}

SubgroupoidView build_subgroupoid(const SubgroupoidDecl& d, const Env& env) {
  const FiniteGroupoid& g = env.get<FiniteGroupoid>(d.parent);
  switch (d.kind) {
    case SubgroupoidDecl::Kind::Identities: return identities_subgroupoid(g);
    case SubgroupoidDecl::Kind::Whole: return whole_subgroupoid(g);
    case SubgroupoidDecl::Kind::Isotropy: return isotropy_group(g, object_index(g, d.object));
    case SubgroupoidDecl::Kind::Members: break;
  }
  std::vector<Index> members;
  for (const std::string& m : d.members) members.push_back(morphism_index(g, m));
  return check_subgroupoid(g, std::move(members));
}

GradedAlgebra build_algebra(const AlgebraDecl& d, const Env& env) {
  const FiniteGroupoid& g = env.get<FiniteGroupoid>(d.groupoid);
  if (d.groupoid_algebra) return groupoid_algebra(g);
  const Index dim = static_cast<Index>(d.basis.size());
  std::vector<std::string> names;
  std::vector<Index> deg;
  for (const auto& b : d.basis) {
    names.push_back(b.name);
    deg.push_back(morphism_index(g, b.degree));
  }
  std::vector<std::vector<Term>> products(static_cast<size_t>(dim * dim));
  std::vector<bool> given(products.size(), false);
  auto index = [&](const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) unresolved("unknown basis element '" + n + "'");
    return static_cast<Index>(it - names.begin());
  };
  for (const auto& m : d.mults) {
    const size_t slot = static_cast<size_t>(index(m.left) * dim + index(m.right));
    if (given[slot]) throw NameError{ErrorCode::DuplicateName, "product " + m.left + "*" + m.right + " given twice"};
    given[slot] = true;
    const Vector v = lincomb_vector(names, m.value);
    for (Index k = 0; k < dim; ++k)
      if (!v(k).is_zero()) products[slot].push_back({k, v(k)});
  }
  std::optional<Vector> unit;
  if (d.has_unit) unit = lincomb_vector(names, d.unit);
  StructureAlgebra alg = StructureAlgebra::validate(dim, std::move(products), unit, names);
  if (!d.has_unit) {
    unit = find_unit(alg);
    if (!unit) fail(ErrorCode::Unit, "no unit given and none exists");
    std::vector<std::vector<Term>> table;
    for (Index i = 0; i < dim; ++i)
      for (Index j = 0; j < dim; ++j) table.push_back(alg.terms(i, j));
    alg = StructureAlgebra::validate(dim, std::move(table), unit, names);
  }
  return GradedAlgebra::validate(std::move(alg), g, std::move(deg));
}

GSetAction build_action(const ActionDecl& d, const Env& env) {
  if (d.kind == ActionDecl::Kind::Left) return left_translation_action(env.get<FiniteGroupoid>(d.groupoid));
  if (d.kind == ActionDecl::Kind::Right) return right_translation_action(env.get<SubgroupoidView>(d.sub));
  const FiniteGroupoid& g = env.get<FiniteGroupoid>(d.groupoid);
  auto point = [&](const std::string& n) {
    auto it = std::find(d.points.begin(), d.points.end(), n);
    if (it == d.points.end()) unresolved("unknown point '" + n + "'");
    return static_cast<Index>(it - d.points.begin());
  };
  std::vector<std::vector<Index>> fibers(static_cast<size_t>(g.object_count()));
  for (const auto& f : d.fibers) {
    auto& fiber = fibers[static_cast<size_t>(object_index(g, f.object))];
    for (const std::string& p : f.points) fiber.push_back(point(p));
  }
  std::vector<std::vector<Index>> alpha(static_cast<size_t>(g.size()));
  std::vector<bool> given(alpha.size(), false);
  for (const auto& m : d.maps) {
    const Index k = morphism_index(g, m.morphism);
    if (given[static_cast<size_t>(k)]) throw NameError{ErrorCode::DuplicateName, "map " + m.morphism + " given twice"};
    given[static_cast<size_t>(k)] = true;
    const auto& src = fibers[static_cast<size_t>(g.dom(k))];
    std::vector<Index> images(src.size(), kNone);
    for (const auto& [from, to] : m.pairs) {
      auto it = std::find(src.begin(), src.end(), point(from));
      if (it == src.end())
        fail(ErrorCode::NotBijective, "alpha_" + m.morphism + " maps " + from + ", which is not in X_" +
                                          g.object_name(g.dom(k)));
      images[static_cast<size_t>(it - src.begin())] = point(to);
    }
    alpha[static_cast<size_t>(k)] = std::move(images);
  }
  for (Index k = 0; k < g.size(); ++k) {
    auto& images = alpha[static_cast<size_t>(k)];
    const auto& src = fibers[static_cast<size_t>(g.dom(k))];
    if (!given[static_cast<size_t>(k)] && g.is_identity(k)) images = src;
    if (images.size() != src.size() || std::find(images.begin(), images.end(), kNone) != images.end())
      fail(ErrorCode::NotBijective, "alpha_" + g.morphism_name(k) + " is not total on X_" + g.object_name(g.dom(k)));
  }
  return GSetAction::validate(g, static_cast<Index>(d.points.size()), std::move(fibers), alpha, d.points);
}

BiSet build_biset(const BisetDecl& d, const Env& env) {
  if (d.kind == BisetDecl::Kind::Explicit) return BiSet::validate(env.get<GSetAction>(d.gset), env.get<GSetAction>(d.kset));
  const FiniteGroupoid& g = env.get<FiniteGroupoid>(d.groupoid);
  const SubgroupoidView h = d.sub.empty() ? whole_subgroupoid(g) : env.get<SubgroupoidView>(d.sub);
  if (!(h.parent() == g)) fail(ErrorCode::DimMismatch, "subgroupoid '" + d.sub + "' is not inside '" + d.groupoid + "'");
  return BiSet::validate(left_translation_action(g), right_translation_action(h));
}

XGradedModule build_module(const ModuleDecl& d, const Env& env) {
  const GradedAlgebra& ga = env.get<GradedAlgebra>(d.algebra);
  const GSetAction& action = env.get<GSetAction>(d.action);
  if (d.regular) {
    const SmashAlgebra s = smash_product(ga, action);
    return to_xgraded(s, regular_module(s.algebra, Side::Left)).graded;
  }
  const Index dim = static_cast<Index>(d.deg.size());
  std::vector<Index> deg;
  for (const std::string& p : d.deg) deg.push_back(point_index(action, p));
  std::vector<Matrix> act(static_cast<size_t>(ga.dim()), Matrix::Zero(dim, dim));
  std::vector<bool> given(act.size(), false);
  for (const auto& a : d.acts) {
    const Index i = basis_index(ga.algebra(), a.basis);
    if (given[static_cast<size_t>(i)]) throw NameError{ErrorCode::DuplicateName, "act " + a.basis + " given twice"};
    given[static_cast<size_t>(i)] = true;
    if (static_cast<Index>(a.rows.size()) != dim)
      fail(ErrorCode::Malformed, "act " + a.basis + ": expected " + std::to_string(dim) + " rows");
    for (Index r = 0; r < dim; ++r) {
      const auto& row = a.rows[static_cast<size_t>(r)];
      if (static_cast<Index>(row.size()) != dim)
        fail(ErrorCode::Malformed, "act " + a.basis + ": row " + std::to_string(r) + " has the wrong length");
      for (Index c = 0; c < dim; ++c) act[static_cast<size_t>(i)](r, c) = row[static_cast<size_t>(c)];
    }
  }
  return validate_xgraded(ga, action, ModuleRep::validate(ga.algebra(), std::move(act), Side::Left), std::move(deg));
}

GSetMorphism build_morphism(const MorphismDecl& d, const Env& env) {
  const GSetAction& src = env.get<GSetAction>(d.source);
  const GSetAction& dst = env.get<GSetAction>(d.target);
  std::vector<Index> map(static_cast<size_t>(src.carrier_size()), kNone);
  for (const auto& [from, to] : d.pairs) map[static_cast<size_t>(point_index(src, from))] = point_index(dst, to);
  for (Index x = 0; x < src.carrier_size(); ++x)
    if (map[static_cast<size_t>(x)] == kNone) fail(ErrorCode::NotMorphism, "no image for point " + src.point_name(x));
  return make_morphism(src, dst, std::move(map));
}

Json names_json(const FiniteGroupoid& g, const std::vector<Index>& morphisms) {
  Json out = Json::array();
  for (Index m : morphisms) out.push_back(g.morphism_name(m));
  return out;
}

Json summarize(const Built& b) {
  if (const auto* g = std::get_if<FiniteGroupoid>(&b)) return groupoid_json(*g);
  if (const auto* s = std::get_if<SubgroupoidView>(&b))
    return {{"members", names_json(s->parent(), s->members())}, {"wide", s->wide()}};
  if (const auto* a = std::get_if<GradedAlgebra>(&b)) return graded_json(*a);
  if (const auto* a = std::get_if<GSetAction>(&b)) return action_json(*a);
  if (const auto* bs = std::get_if<BiSet>(&b))
    return {{"gAction", action_json(bs->g_action())}, {"kAction", action_json(bs->k_action())}};
  if (const auto* m = std::get_if<XGradedModule>(&b)) return module_json(*m);
  const auto& phi = std::get<GSetMorphism>(b);
  Json map = Json::object();
  for (Index x = 0; x < phi.source.carrier_size(); ++x)
    map[phi.source.point_name(x)] = phi.target.point_name(phi.map[static_cast<size_t>(x)]);
  return {{"kind", std::string(morphism_kind_name(phi.kind.kind))}, {"map", map}};
}

Built build(const Decl& d, const Env& env) {
  return std::visit(
      [&](const auto& body) -> Built {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, GroupoidDecl>) return build_groupoid(body, env);
        else if constexpr (std::is_same_v<T, SubgroupoidDecl>) return build_subgroupoid(body, env);
        else if constexpr (std::is_same_v<T, AlgebraDecl>) return build_algebra(body, env);
        else if constexpr (std::is_same_v<T, ActionDecl>) return build_action(body, env);
        else if constexpr (std::is_same_v<T, BisetDecl>) return build_biset(body, env);
        else if constexpr (std::is_same_v<T, ModuleDecl>) return build_module(body, env);
        else return build_morphism(body, env);
      },
      d.body);
}

// ---------------------------------------------------------------------------
// Tasks

struct TaskContext {
  const Document& doc;
  const Env& env;
  const Task& task;
  const RunOptions& options;
  Json out = Json::object();
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }

  /// The declaration named by `key`, or the only declaration of that kind.
  std::string pick(const std::string& key, const std::string& kind) const {
    const std::string given = task.arg(key);
    if (!given.empty()) return given;
    std::string found;
    for (const Decl& d : doc.decls)
      if (kind_name(d.body) == kind) {
        if (!found.empty()) unresolved("task " + task.name + " needs " + key + "= (several " + kind + "s declared)");
        found = d.name;
      }
    if (found.empty()) unresolved("task " + task.name + " needs " + key + "= (no " + kind + " declared)");
    return found;
  }

  void guard(Index dim, const std::string& what) const {
    if (dim > options.max_dim)
      fail(ErrorCode::TooLarge, what + " would have dimension " + std::to_string(dim) + " > --max-dim " +
                                    std::to_string(options.max_dim));
  }
};

Index smash_dim(const GradedAlgebra& ga, const GSetAction& a) {
  Index n = 0;
  for (Index i = 0; i < ga.dim(); ++i) n += static_cast<Index>(a.fiber(ga.groupoid().dom(ga.deg(i))).size());
  return n;
}

void assert_duality(TaskContext& t, const DualityReport& r) {
  t.require(r.fixed_equals_image, "fixed subalgebra differs from the orbit image");
  if (r.fully_faithful) {
    t.require(r.map_ok, "canonical map is not an isomorphism");
    t.require(r.galois_pointwise_ok, "pointwise Galois coordinates fail");
  }
}

void task_check(TaskContext& t) {
  const std::string target = t.task.arg("target");
  Json items = Json::array();
  for (const Decl& d : t.doc.decls) {
    if (!target.empty() && d.name != target) continue;
    const Entry& e = t.env.entries.at(d.name);
    Json item = {{"name", d.name}, {"kind", e.kind}, {"ok", e.value.has_value()}};
    if (!e.value) {
      item["error"] = {{"code", std::string(code_name(e.code))}, {"witness", e.witness}};
      t.failures.push_back(d.name + ": " + std::string(code_name(e.code)) + ": " + e.witness);
    } else {
      item["summary"] = e.summary;
      if (const auto* m = std::get_if<XGradedModule>(&*e.value)) {
        const Verdict rt = roundtrip_check(*m);
        item["roundtrip"] = rt.ok;
        if (!rt) {
          item["ok"] = false;
          t.failures.push_back(d.name + ": roundtrip: " + rt.witness);
        }
      }
    }
    items.push_back(std::move(item));
  }
  t.out["declarations"] = items;
}

void task_orbits(TaskContext& t) {
  const bool use_biset = !t.task.arg("biset").empty() ||
                         (t.task.arg("action").empty() &&
                          std::none_of(t.doc.decls.begin(), t.doc.decls.end(),
                                       [](const Decl& d) { return kind_name(d.body) == "action"; }));
  auto describe = [](const GSetAction& a) {
    Json j = action_json(a);
    const Verdict ff = is_fully_faithful(a);
    j["fullyFaithful"] = ff.ok;
    j["fullyFaithfulWitness"] = ff.witness;
    if (!a.split()) return j;
    Json orbits = Json::array();
    for (const auto& o : orbit_partition(a)) {
      Json names = Json::array();
      for (Index x : o) names.push_back(a.point_name(x));
      orbits.push_back(names);
    }
    Json stabilizers = Json::object();
    for (Index x = 0; x < a.carrier_size(); ++x)
      stabilizers[a.point_name(x)] = names_json(a.groupoid(), stabilizer(a, x).members());
    j["orbits"] = orbits;
    j["stabilizers"] = stabilizers;
    j["transitive"] = is_transitive(a);
    return j;
  };
  if (use_biset) {
    const std::string name = t.pick("biset", "biset");
    const BiSet& b = t.env.get<BiSet>(name);
    t.out["biset"] = name;
    t.out["gAction"] = describe(b.g_action());
    t.out["kAction"] = describe(b.k_action());
    const OrbitGSet o = orbit_gset(b);
    t.out["kOrbitGSet"] = describe(o.action);
  } else {
    const std::string name = t.pick("action", "action");
    t.out["action"] = name;
    t.out["gAction"] = describe(t.env.get<GSetAction>(name));
  }
}

void task_smash(TaskContext& t) {
  const GradedAlgebra& ga = t.env.get<GradedAlgebra>(t.pick("algebra", "algebra"));
  const GSetAction& action = t.env.get<GSetAction>(t.pick("action", "action"));
  t.guard(smash_dim(ga, action), "A#X");
  const SmashAlgebra s = smash_product(ga, action);
  t.out["dim"] = s.dim();
  t.out["basis"] = s.algebra.basis_names();
  t.out["unit"] = vector_json(s.algebra.unit());
  bool eta_ok = true;
  std::string eta_witness;
  try {
    eta_embedding(s);
  } catch (const Error& e) {
    eta_ok = false;
    eta_witness = e.witness();
  }
  t.out["etaOK"] = eta_ok;
  t.require(eta_ok, "eta: " + eta_witness);
  const SmashBimodule bm = bimodule_actions(s);
  t.out["deltaIdentities"] = bm.identities.ok;
  t.out["mixedAssociativity"] = bm.mixed_associativity.ok;
  t.require(bm.identities.ok, "delta identities: " + bm.identities.witness);
  t.require(bm.mixed_associativity.ok, "mixed associativity: " + bm.mixed_associativity.witness);
  if (!t.task.arg("morphism").empty()) {
    const GSetMorphism& phi = t.env.get<GSetMorphism>(t.task.arg("morphism"));
    t.guard(smash_dim(ga, phi.target), "A#Z");
    const InducedMorphism im = induced_morphism(phi, ga);
    t.out["induced"] = {{"kind", std::string(morphism_kind_name(phi.kind.kind))},
                        {"rank", im.rank},
                        {"injective", im.injective},
                        {"surjective", im.surjective},
                        {"contractOK", im.contract_ok}};
    t.require(im.contract_ok, "induced map violates the injective/surjective exchange");
  }
}

void task_duality(TaskContext& t) {
  const BiSet& b = t.env.get<BiSet>(t.pick("biset", "biset"));
  const GradedAlgebra& ga = t.env.get<GradedAlgebra>(t.pick("algebra", "algebra"));
  t.guard(smash_dim(ga, b.g_action()), "A#X");
  const DualityReport r = verify_duality(b, ga);
  t.out.update(duality_json(r));
  assert_duality(t, r);
}

void task_coset(TaskContext& t) {
  const SubgroupoidView& h = t.env.get<SubgroupoidView>(t.pick("sub", "subgroupoid"));
  const GradedAlgebra& ga = t.env.get<GradedAlgebra>(t.pick("algebra", "algebra"));
  t.guard(smash_dim(ga, left_translation_action(ga.groupoid())), "A#G");
  const CosetDualityReport r = coset_duality(h, ga);
  t.out.update(duality_json(r.duality));
  t.out["cosetCount"] = r.coset_count;
  t.out["cosetsMatch"] = r.cosets_match;
  t.out["cosetsMatchLiteral"] = r.cosets_match_literal;
  assert_duality(t, r.duality);
  t.require(r.duality.map_ok, "canonical map is not an isomorphism");
  t.require(r.cosets_match, "orbits do not match the right cosets");
}

void task_ig(TaskContext& t) {
  const GSetAction& a = t.env.get<GSetAction>(t.pick("action", "action"));
  const GradedAlgebra& ga = t.env.get<GradedAlgebra>(t.pick("algebra", "algebra"));
  t.guard(smash_dim(ga, a), "A#X");
  const PartialBijectionReport r = partial_bijection_duality(a, ga);
  t.out.update(duality_json(r.duality));
  t.out["objects"] = r.objects;
  t.out["morphisms"] = r.morphisms;
  assert_duality(t, r.duality);
  t.require(r.duality.map_ok, "canonical map is not an isomorphism");
}

void task_weakhopf(TaskContext& t) {
  const GradedAlgebra& ga = t.env.get<GradedAlgebra>(t.pick("algebra", "algebra"));
  t.guard(smash_dim(ga, left_translation_action(ga.groupoid())), "A#kG*");
  const WeakHopfReport r = weak_hopf_smash(ga);
  t.out["dim"] = r.smash.dim();
  t.out["psiIso"] = r.psi_iso;
  t.out["dualIdentities"] = r.dual_identities.ok;
  t.out["duality"] = duality_json(r.duality);
  t.out["mapOK"] = r.duality.map_ok;
  t.require(r.psi_iso, "psi is not an algebra isomorphism");
  t.require(r.dual_identities.ok, "kG* identities: " + r.dual_identities.witness);
  t.require(r.duality.map_ok, "canonical map is not an isomorphism");
}

void task_morita(TaskContext& t) {
  const GradedAlgebra& ga = t.env.get<GradedAlgebra>(t.pick("algebra", "algebra"));
  const GSetAction& action = t.env.get<GSetAction>(t.pick("action", "action"));
  t.guard(smash_dim(ga, action), "A#X");
  if (!action.split()) fail(ErrorCode::NotSplit, "the Morita context needs a split action");
  if (action.carrier_size() == 0) fail(ErrorCode::Empty, "the action has no points");
  const std::string point = t.task.arg("point");
  const Index x = point.empty() ? 0 : point_index(action, point);

  const MoritaContext ctx = build_morita_context(ga, action, x);
  const StrictnessReport s = strictness_report(ctx);
  t.out.update(morita_json(ctx, s));
  t.require(ctx.checks.ok(), "context axioms fail");

  bool fibers_nonempty = true;
  for (Index e = 0; e < ga.groupoid().object_count(); ++e)
    if (action.fiber(e).empty()) fibers_nonempty = false;
  t.require(!s.all_points() || s.square_surjective, "per-point criterion holds but [,] is not surjective");
  t.require(!(s.square_surjective && fibers_nonempty) || s.all_points(),
            "[,] is surjective but the per-point criterion fails");
  const bool vxx = hom_component(ga, action, x, x) == stabilizer_subalgebra(ga, action, x).space;
  t.out["homComponentIsStabilizer"] = vxx;
  t.require(vxx, "V_{x,x} differs from the stabilizer subalgebra");

  const SmashAlgebra smash = smash_product(ga, action);
  const std::string random_arg = t.task.arg("random");
  if (!random_arg.empty() && !std::all_of(random_arg.begin(), random_arg.end(), ::isdigit))
    unresolved("random= expects a count, found '" + random_arg + "'");
  const int count = random_arg.empty() ? 4 : std::stoi(random_arg);
  std::mt19937_64 rng(t.options.seed);
  Json rt = {{"random", count}, {"ok", true}};
  for (int k = 0; k < count; ++k) {
    const ModuleRep v = random_smash_module(smash, rng);
    const Verdict r = roundtrip_check(smash, v);
    if (!r) {
      rt["ok"] = false;
      t.failures.push_back("roundtrip of random module " + std::to_string(k) + ": " + r.witness);
      break;
    }
  }
  if (!t.task.arg("module").empty()) {
    const XGradedModule& m = t.env.get<XGradedModule>(t.task.arg("module"));
    const Verdict r = roundtrip_check(m);
    rt["module"] = r.ok;
    t.require(r.ok, "roundtrip of " + t.task.arg("module") + ": " + r.witness);
  }
  t.out["roundtrip"] = rt;
}

}  // namespace

RunResult run(const Document& doc, const RunOptions& options) {
  RunResult result;
  Json decls = Json::array();
  Env env;
  try {
    for (const Decl& d : doc.decls) {
      Entry e;
      e.kind = kind_name(d.body);
      try {
        e.value = build(d, env);
        e.summary = summarize(*e.value);
      } catch (const Error& err) {
        e.code = err.code();
        e.witness = err.witness();
      } catch (const DependencyError& dep) {
        e.code = dep.code;
        e.witness = dep.witness;
      }
      Json item = {{"name", d.name}, {"kind", e.kind}, {"ok", e.value.has_value()}};
      if (!e.value) {
        item["error"] = {{"code", std::string(code_name(e.code))}, {"witness", e.witness}};
        result.exit_code = kExitAssertion;
      }
      decls.push_back(std::move(item));
      env.entries.emplace(d.name, std::move(e));
    }

    Json tasks = Json::array();
    for (const Task& task : doc.tasks) {
      if (!options.task_filter.empty() && task.name != options.task_filter) continue;
      TaskContext t{doc, env, task, options, Json::object(), {}};
      Json args = Json::object();
      for (const auto& [k, v] : task.args) args[k] = v;
      try {
        if (task.name == "check") task_check(t);
        else if (task.name == "orbits") task_orbits(t);
        else if (task.name == "smash") task_smash(t);
        else if (task.name == "duality") task_duality(t);
        else if (task.name == "coset-duality") task_coset(t);
        else if (task.name == "ig-duality") task_ig(t);
        else if (task.name == "weakhopf") task_weakhopf(t);
        else task_morita(t);
      } catch (const Error& err) {
        t.out["error"] = error_json(err);
        t.failures.push_back(std::string(code_name(err.code())) + ": " + err.witness());
      } catch (const DependencyError& dep) {
        t.out["error"] = {{"code", std::string(code_name(dep.code))}, {"witness", dep.witness}};
        t.failures.push_back(std::string(code_name(dep.code)) + ": " + dep.witness);
      }
      t.out["task"] = task.name;
      t.out["args"] = args;
      t.out["failures"] = t.failures;
      t.out["ok"] = t.failures.empty();
      if (!t.failures.empty()) result.exit_code = kExitAssertion;
      tasks.push_back(std::move(t.out));
    }
    result.report = {{"declarations", decls}, {"tasks", tasks}, {"seed", options.seed}};
  } catch (const NameError& e) {
    result.report = {{"declarations", decls},
                     {"error", {{"code", std::string(code_name(e.code))}, {"witness", e.message}}},
                     {"seed", options.seed}};
    result.exit_code = kExitUsage;
  }
  result.report["ok"] = result.exit_code == kExitPass;
  return result;
}

RunResult run_text(const std::string& text, const RunOptions& options) {
  try {
    return run(parse_spec(text), options);
  } catch (const ParseError& e) {
    RunResult r;
    r.exit_code = kExitUsage;
    r.report = {{"ok", false},
                {"error",
                 {{"code", std::string(code_name(e.code()))},
                  {"line", e.pos().line},
                  {"column", e.pos().column},
                  {"witness", e.witness()}}}};
    return r;
  }
}

}  // namespace gsm
