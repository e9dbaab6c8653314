#ifndef GSM_GROUPOID_HPP
#define GSM_GROUPOID_HPP

#include <gsm/scalar.hpp>

#include <string>
#include <vector>

namespace gsm {

inline constexpr Index kNone = -1;

/// Raw tables describing a candidate groupoid. Morphisms and objects are dense
/// indices; `comp[g * n + h]` holds gh or kNone when d(g) != r(h).
struct GroupoidTables {
  std::vector<std::string> object_names;
  std::vector<std::string> morphism_names;
  std::vector<Index> dom;
  std::vector<Index> ran;
  std::vector<Index> identity;  // object -> morphism
  std::vector<Index> inverse;   // morphism -> morphism
  std::vector<Index> comp;      // n x n, row-major in (g, h)
};

/// A finite groupoid, validated by exhaustive enumeration of every axiom.
/// Immutable once constructed.
class FiniteGroupoid {
 public:
  /// Checks every invariant and throws gsm::Error with a witness on failure
  /// (E_COMP_DOMAIN, E_ASSOC, E_IDENTITY, E_INVERSE, E_MALFORMED).
  static FiniteGroupoid validate(GroupoidTables tables);

  Index size() const { return static_cast<Index>(t_.dom.size()); }
  Index object_count() const { return static_cast<Index>(t_.identity.size()); }

  Index dom(Index g) const { return t_.dom[static_cast<size_t>(g)]; }
  Index ran(Index g) const { return t_.ran[static_cast<size_t>(g)]; }
  Index inverse(Index g) const { return t_.inverse[static_cast<size_t>(g)]; }
  Index identity(Index e) const { return t_.identity[static_cast<size_t>(e)]; }
  bool composable(Index g, Index h) const { return dom(g) == ran(h); }
  /// gh, or kNone when d(g) != r(h).
  Index compose(Index g, Index h) const { return t_.comp[static_cast<size_t>(g * size() + h)]; }
  bool is_identity(Index g) const { return identity(dom(g)) == g; }

  const std::string& morphism_name(Index g) const { return t_.morphism_names[static_cast<size_t>(g)]; }
  const std::string& object_name(Index e) const { return t_.object_names[static_cast<size_t>(e)]; }
  /// kNone when absent.
  Index find_morphism(const std::string& name) const;
  Index find_object(const std::string& name) const;

  /// D_e = {g : d(g) = e} and R_e = {g : r(g) = e}, ascending.
  std::vector<Index> morphisms_from(Index e) const;
  std::vector<Index> morphisms_to(Index e) const;
  /// G(e, f) = {g : d(g) = e, r(g) = f}.
  std::vector<Index> hom(Index e, Index f) const;

  const GroupoidTables& tables() const { return t_; }

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
    return a.t_.dom == b.t_.dom && a.t_.ran == b.t_.ran && a.t_.identity == b.t_.identity &&
           a.t_.comp == b.t_.comp;
  }

 private:
  explicit FiniteGroupoid(GroupoidTables t) : t_(std::move(t)) {}
  GroupoidTables t_;
};

/// n objects with exactly one morphism e -> f for every ordered pair.
/// Objects are named `names` when given (size n), otherwise e0, e1, ...;
/// morphisms are named id_e and e->f. Throws E_EMPTY for n = 0.
FiniteGroupoid pair_groupoid(Index n, std::vector<std::string> names = {});

/// One-object groupoid of a group given by its multiplication table over
/// element indices (table[a][b] = ab). Throws E_NOT_GROUP.
FiniteGroupoid group_as_groupoid(const std::vector<std::vector<Index>>& table,
                                 std::vector<std::string> element_names = {},
                                 std::string object_name = "o");

/// Cyclic group Z/n as a one-object groupoid (elements 0..n-1).
FiniteGroupoid cyclic_group(Index n);

/// Coproduct; morphisms and objects of `b` are shifted after those of `a`.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// Product groupoid a x b. Morphism (g, k) has index g * |b| + k, object
/// (e, p) has index e * |b_0| + p.
FiniteGroupoid product(const FiniteGroupoid& a, const FiniteGroupoid& b);

/// A subset of morphisms closed under composition and inverses.
class SubgroupoidView {
 public:
  const FiniteGroupoid& parent() const { return parent_; }
  /// Sorted ascending.
  const std::vector<Index>& members() const { return members_; }
  bool contains(Index g) const { return mask_[static_cast<size_t>(g)]; }
  bool wide() const { return wide_; }

  /// The subgroupoid as a groupoid of its own. Objects are those of the parent
  /// whose identity is a member; morphism i of the result is members()[i].
  FiniteGroupoid as_groupoid() const;
  /// Parent-object index of each object of as_groupoid().
  std::vector<Index> object_embedding() const;

 private:
  friend SubgroupoidView check_subgroupoid(const FiniteGroupoid&, std::vector<Index>);
  FiniteGroupoid parent_;
  std::vector<Index> members_;
  std::vector<bool> mask_;
  bool wide_ = false;

  SubgroupoidView(FiniteGroupoid parent, std::vector<Index> members, std::vector<bool> mask, bool wide)
      : parent_(std::move(parent)), members_(std::move(members)), mask_(std::move(mask)), wide_(wide) {}
};

/// Throws E_NOT_CLOSED with a witness pair (or single morphism for a missing
/// inverse), E_EMPTY for an empty member list.
SubgroupoidView check_subgroupoid(const FiniteGroupoid& g, std::vector<Index> members);

/// G_e = G(e, e), verified to be a group. Throws E_NO_OBJECT.
SubgroupoidView isotropy_group(const FiniteGroupoid& g, Index e);

struct Fibers {
  std::vector<Index> from;  // D_e
  std::vector<Index> to;    // R_e
};
/// Throws E_NO_OBJECT.
Fibers fibers(const FiniteGroupoid& g, Index e);

SubgroupoidView identities_subgroupoid(const FiniteGroupoid& g);
SubgroupoidView whole_subgroupoid(const FiniteGroupoid& g);

/// Partition of the morphisms by g ~ h iff d(g) = d(h) and gh^{-1} in H.
struct CosetPartition {
  std::vector<std::vector<Index>> blocks;  // each sorted; blocks ordered by least member
  std::vector<Index> block_of;             // morphism -> block index
};

/// Throws E_NOT_WIDE.
CosetPartition right_cosets(const SubgroupoidView& h);

}  // namespace gsm

#endif  // GSM_GROUPOID_HPP
