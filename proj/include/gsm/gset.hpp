#ifndef GSM_GSET_HPP
#define GSM_GSET_HPP

#include <gsm/groupoid.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gsm {

/// Outcome of a yes/no structural check, with a human-readable witness when
/// the answer is no.
struct Verdict {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
  static Verdict yes() { return {}; }
  static Verdict no(std::string w) { return {false, std::move(w)}; }
};

/// Action of a finite groupoid on a finite set X = {0, ..., n-1}: fibers X_e
/// per object (X_g := X_{r(g)}) and bijections alpha_g : X_{d(g)} -> X_{r(g)}.
/// Fibers may overlap; split() reports whether they partition X.
class GSetAction {
 public:
  /// `alpha[g][i]` is the image of the i-th point of `fibers[d(g)]` (in the
  /// order given). Throws E_NOT_BIJECTIVE, E_IDENTITY_ACTION, E_COCYCLE,
  /// E_MALFORMED.
  static GSetAction validate(FiniteGroupoid groupoid, Index carrier_size,
                             std::vector<std::vector<Index>> fibers,
                             const std::vector<std::vector<Index>>& alpha,
                             std::vector<std::string> point_names = {});

  const FiniteGroupoid& groupoid() const { return groupoid_; }
  Index carrier_size() const { return carrier_size_; }
  /// X_e, ascending.
  const std::vector<Index>& fiber(Index e) const { return fibers_[static_cast<size_t>(e)]; }
  bool in_fiber(Index e, Index x) const {
    return member_[static_cast<size_t>(e * carrier_size_ + x)];
  }
  /// alpha_g(x), or kNone when x is not in X_{d(g)}.
  Index apply(Index g, Index x) const { return table_[static_cast<size_t>(g * carrier_size_ + x)]; }
  bool split() const { return split_; }
  /// The unique object e with x in X_e; kNone when x lies in no fiber.
  /// Only meaningful for split actions.
  Index object_of(Index x) const { return object_of_[static_cast<size_t>(x)]; }
  const std::string& point_name(Index x) const { return point_names_[static_cast<size_t>(x)]; }
  const std::vector<std::string>& point_names() const { return point_names_; }
  Index find_point(const std::string& name) const;

 private:
  GSetAction() = default;
  FiniteGroupoid groupoid_ = pair_groupoid(1);
  Index carrier_size_ = 0;
  std::vector<std::vector<Index>> fibers_;
  std::vector<bool> member_;
  std::vector<Index> table_;
  std::vector<Index> object_of_;
  std::vector<std::string> point_names_;
  bool split_ = false;
};

/// Every groupoid acting on itself by g . h = gh with X_e = R_e.
GSetAction left_translation_action(const FiniteGroupoid& g);

/// The wide subgroupoid H (as a groupoid of its own) acting on the morphisms
/// of its parent by h . l = l h^{-1} with fibers D_e. Throws E_NOT_WIDE.
GSetAction right_translation_action(const SubgroupoidView& h);

/// Every alpha_g is an identity map. Valid only when each morphism is an
/// endomorphism (the groupoid is a disjoint union of groups); `object_of_point`
/// places each carrier point in one fiber.
GSetAction trivial_action(const FiniteGroupoid& g, const std::vector<Index>& object_of_point);

/// Throws E_NOT_SPLIT.
std::vector<Index> orbit(const GSetAction& action, Index x);
/// O^G, blocks ascending and ordered by least element.
std::vector<std::vector<Index>> orbit_partition(const GSetAction& action);
/// G_x = {g in G_e : alpha_g(x) = x}. Throws E_NOT_SPLIT.
SubgroupoidView stabilizer(const GSetAction& action, Index x);

/// alpha_g(Y cap X_{g^{-1}}) subset of Y cap X_g for all g.
Verdict is_invariant(const GSetAction& action, const std::vector<Index>& subset);

/// alpha_l(x) = x for x in X_l cap X_{l^{-1}} forces l to be an identity.
Verdict is_fully_faithful(const GSetAction& action);

/// Single orbit. Throws E_NOT_SPLIT. Vacuously true on the empty carrier.
bool is_transitive(const GSetAction& action);

enum class MorphismKind { NotMorphism, Morphism, Mono, Epi, Iso };
std::string_view morphism_kind_name(MorphismKind k);

struct MorphismClass {
  MorphismKind kind = MorphismKind::NotMorphism;
  std::string witness;
  bool is_morphism() const { return kind != MorphismKind::NotMorphism; }
  bool injective() const { return kind == MorphismKind::Mono || kind == MorphismKind::Iso; }
  bool surjective() const { return kind == MorphismKind::Epi || kind == MorphismKind::Iso; }
};

/// Classifies `map` : src -> dst against phi(X_g) in Z_g and phi alpha_g = beta_g phi.
MorphismClass check_morphism(const std::vector<Index>& map, const GSetAction& src, const GSetAction& dst);

/// A map of G-sets known to satisfy both morphism conditions.
struct GSetMorphism {
  GSetAction source;
  GSetAction target;
  std::vector<Index> map;
  MorphismClass kind;
};

/// Throws E_NOT_MORPHISM with the classification witness.
GSetMorphism make_morphism(GSetAction source, GSetAction target, std::vector<Index> map);

GSetMorphism compose(const GSetMorphism& outer, const GSetMorphism& inner);

/// An invariant subset with the restricted action, renumbered 0..|Y|-1 in
/// ascending carrier order. embedding[i] is the carrier index of local point i.
struct SubGSet {
  GSetAction action;
  std::vector<Index> embedding;
};

/// Throws E_NOT_INVARIANT.
SubGSet restrict_action(const GSetAction& action, std::vector<Index> subset);

/// Inclusion of an invariant subset as a G-set monomorphism.
GSetMorphism inclusion_morphism(const GSetAction& action, const SubGSet& sub);

/// Commuting actions of G (alpha, fibers X_e) and K (beta, fibers Y_p) on one
/// carrier with mutually invariant fibers.
class BiSet {
 public:
  /// Throws E_NOT_INVARIANT, E_NOT_COMMUTING, E_DIM_MISMATCH.
  static BiSet validate(GSetAction g_action, GSetAction k_action);

  const GSetAction& g_action() const { return g_; }
  const GSetAction& k_action() const { return k_; }
  bool split() const { return g_.split() && k_.split(); }
  Index carrier_size() const { return g_.carrier_size(); }

 private:
  BiSet(GSetAction g, GSetAction k) : g_(std::move(g)), k_(std::move(k)) {}
  GSetAction g_;
  GSetAction k_;
};

/// The G-sets Y_{k^{-1}} and Y_k (restrictions of the G-action) and beta_k as
/// a map between them, classified.
struct RestrictedAction {
  SubGSet source;      // Y_{k^{-1}} = Y_{d(k)}
  SubGSet target;      // Y_k = Y_{r(k)}
  std::vector<Index> beta;  // local source index -> local target index
  MorphismClass beta_class;
};

RestrictedAction restricted_action(const BiSet& biset, Index k);

/// The set of K-orbits as a G-set with lambda_g(o(x)) = o(alpha_g(x)), and the
/// projection x -> o(x).
struct OrbitGSet {
  std::vector<std::vector<Index>> orbits;  // ordered by least element (= representative)
  std::vector<Index> orbit_of;
  GSetAction action;
  GSetMorphism projection;
};

/// Throws E_NOT_SPLIT_K. lambda is checked against every representative.
OrbitGSet orbit_gset(const BiSet& biset);

inline constexpr Index kPartialBijectionLimit = 8;

/// The groupoid I_G(X) of partial bijections between invariant subsets that
/// are G-set morphisms, with objects all invariant subsets (ascending by
/// bitmask), and its tautological action on X (Y_rho = im rho, beta_rho = rho).
struct PartialBijections {
  FiniteGroupoid groupoid;
  std::vector<std::vector<Index>> object_subsets;
  std::vector<std::vector<Index>> maps;  // per morphism: carrier-sized, kNone off the domain
  GSetAction action;
};

/// Throws E_NOT_SPLIT, E_TOO_LARGE (carrier above `limit`).
PartialBijections partial_bijection_groupoid(const GSetAction& action, Index limit = kPartialBijectionLimit);

}  // namespace gsm

#endif  // GSM_GSET_HPP
