#ifndef GSM_DUALITY_HPP
#define GSM_DUALITY_HPP

#include <gsm/skew.hpp>

#include <string>
#include <vector>

namespace gsm {

/// End(M) for a right module M: operators commuting with every action matrix.
/// Operators act on the left of module elements, (S T)(m) = S(T(m)), so the
/// product of basis operators is the matrix product.
struct EndomorphismAlgebra {
  StructureAlgebra algebra;
  std::vector<Matrix> basis;
  /// Coordinates of an operator in `basis`, nullopt when it is not an endomorphism.
  std::optional<Vector> coordinates(const Matrix& op) const;
  Subspace flat_span;  // span of the column-major flattened basis operators
};

/// Throws E_MODULE for a left module.
EndomorphismAlgebra endomorphism_algebra(const ModuleRep& m);

/// B acting on the right of the ambient algebra of `act`, B given as a subspace.
ModuleRep right_module_over(const StructureAlgebra& s, const Subspace& b);

struct GaloisMap {
  AlgebraMap map;
  Index rank = 0;
  bool bijective = false;
};

/// x delta_k -> (a -> x gamma_k(a 1_{k^-1})) from the skew ring to End(S_B).
/// Throws E_NOT_ENDO, E_NOT_MULTIPLICATIVE.
GaloisMap canonical_galois_map(const AlgebraAction& act, const SkewRing& skew, const EndomorphismAlgebra& end);

struct DualityReport {
  bool fully_faithful = false;
  std::string fully_faithful_witness;
  /// {u_e, u_e} with u_e the sum of the idempotents over X_e.
  bool galois_ok = false;
  /// {1_e delta_x, 1_e delta_x} over all points x.
  bool galois_pointwise_ok = false;
  bool map_ok = false;
  bool fixed_equals_image = false;
  Index smash_dim = 0;
  Index skew_dim = 0;
  Index end_dim = 0;
  Index invariant_dim = 0;
  Index map_rank = 0;
  std::vector<std::string> details;
  /// The algebras built along the way, kept for independent re-checking.
  std::vector<StructureAlgebra> built;
};

/// Runs the full pipeline; a non-fully-faithful K-action still yields a report.
DualityReport verify_duality(const BiSet& biset, const GradedAlgebra& ga);

struct CosetDualityReport {
  DualityReport duality;
  Index coset_count = 0;
  /// Orbits of the right translation, inverted elementwise, against the right cosets.
  bool cosets_match = false;
  /// The same comparison without inversion.
  bool cosets_match_literal = false;
};

/// Left translation of G against right translation by the wide subgroupoid H.
/// Throws E_NOT_WIDE.
CosetDualityReport coset_duality(const SubgroupoidView& h, const GradedAlgebra& ga);

struct PartialBijectionReport {
  DualityReport duality;
  Index objects = 0;
  Index morphisms = 0;
};

/// Throws E_NOT_TRANSITIVE, E_TOO_LARGE, E_NOT_SPLIT.
PartialBijectionReport partial_bijection_duality(const GSetAction& action, const GradedAlgebra& ga,
                                                 Index limit = kPartialBijectionLimit);

struct WeakHopfReport {
  StructureAlgebra smash;
  std::vector<std::pair<Index, Index>> labels;  // (A-basis index, morphism h)
  AlgebraMap psi;
  Verdict dual_identities;
  bool psi_iso = false;
  DualityReport duality;
};

/// A#kG* from the kG* tables, psi onto A#G (left translation), and the duality
/// against right translation of G on itself. Throws E_NOT_ISO.
WeakHopfReport weak_hopf_smash(const GradedAlgebra& ga);

}  // namespace gsm

#endif  // GSM_DUALITY_HPP
