#ifndef GSM_SMASH_HPP
#define GSM_SMASH_HPP

#include <gsm/algebra.hpp>
#include <gsm/gset.hpp>

namespace gsm {

/// Basis element b_i delta_x of A#X.
struct SmashLabel {
  Index a;
  Index x;
  friend bool operator==(const SmashLabel&, const SmashLabel&) = default;
};

/// A#X with basis (i, x), x in X_{d(deg b_i)}, in lexicographic order.
struct SmashAlgebra {
  GradedAlgebra source;
  GSetAction action;
  StructureAlgebra algebra;
  std::vector<SmashLabel> labels;

  Index dim() const { return algebra.dim(); }
  /// kNone when x is not in X_{d(deg b_i)}.
  Index index_of(Index i, Index x) const { return lookup_[static_cast<size_t>(i * action.carrier_size() + x)]; }
  /// 1_e delta_x for the object e of x.
  Vector idempotent(Index x) const;

  std::vector<Index> lookup_;
};

/// Throws E_NOT_SPLIT.
SmashAlgebra smash_product(const GradedAlgebra& ga, const GSetAction& action);

/// eta(b_i) = sum over x in X_{d(deg b_i)} of b_i delta_x, verified to be an
/// injective unital homomorphism. Throws E_NOT_MULTIPLICATIVE.
AlgebraMap eta_embedding(const SmashAlgebra& s);

/// A#X as an A-bimodule through eta, with the two delta identities checked.
struct SmashBimodule {
  ModuleRep left;
  ModuleRep right;
  Verdict identities;
  Verdict mixed_associativity;
};

SmashBimodule bimodule_actions(const SmashAlgebra& s);

/// phi* : A#Z -> A#X for a G-set morphism phi : X -> Z.
struct InducedMorphism {
  SmashAlgebra source;  // A#Z
  SmashAlgebra target;  // A#X
  AlgebraMap map;
  Index rank = 0;
  bool injective = false;
  bool surjective = false;
  /// phi injective implies phi* surjective, phi surjective implies phi* injective.
  bool contract_ok = false;
};

/// Throws E_NOT_MORPHISM, E_NOT_SPLIT, E_NOT_MULTIPLICATIVE.
InducedMorphism induced_morphism(const GSetMorphism& phi, const GradedAlgebra& ga);

}  // namespace gsm

#endif  // GSM_SMASH_HPP
