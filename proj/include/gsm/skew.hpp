#ifndef GSM_SKEW_HPP
#define GSM_SKEW_HPP

#include <gsm/algebra.hpp>
#include <gsm/smash.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace gsm {

/// Action of a groupoid K on an algebra B: an ideal E_p per object (E_k is
/// E_{r(k)}) and isomorphisms beta_k : E_{d(k)} -> E_{r(k)}. Ideal elements are
/// written in the coordinates of the ideal's RREF basis.
struct AlgebraAction {
  FiniteGroupoid groupoid;
  StructureAlgebra algebra;
  std::vector<Subspace> ideals;              // per object
  std::vector<Matrix> isos;                  // per morphism, dim E_{r(k)} x dim E_{d(k)}
  std::vector<std::optional<Vector>> units;  // per object, ambient coordinates
  bool direct_sum = false;                   // B = sum of the E_p, direct
  bool unital_pieces = false;

  const Subspace& ideal(Index k) const { return ideals[static_cast<size_t>(groupoid.ran(k))]; }
  /// beta_k as a dim B x dim B matrix, meaningful on E_{d(k)} (zero on a complement).
  Matrix ambient_iso(Index k) const;
  /// Throws E_NO_IDEAL_UNIT.
  const Vector& unit_of(Index p) const;
};

/// Throws E_NOT_IDEAL, E_NOT_ISO, E_COCYCLE, E_MALFORMED.
AlgebraAction validate_algebra_action(FiniteGroupoid k, StructureAlgebra b, std::vector<Subspace> ideals,
                                      std::vector<Matrix> isos);

struct SkewLabel {
  Index k;  // morphism
  Index r;  // basis vector of E_k
};

/// B *_beta K on the basis (k, r), ordered by morphism and then by r.
struct SkewRing {
  StructureAlgebra algebra;
  std::vector<SkewLabel> labels;
  std::vector<Index> offset;  // first basis index of each morphism block

  Index dim() const { return algebra.dim(); }
  /// The K-degree of each basis element.
  std::vector<Index> degrees() const;
};

/// Unital with unit sum_p 1_p delta_p exactly when B is the direct sum of unital
/// ideals; otherwise the ring is built without a unit.
SkewRing skew_groupoid_ring(const AlgebraAction& act);

struct Invariants {
  Subspace space;
  StructureAlgebra algebra;
};

/// B^beta = {x : beta_k(x 1_{k^-1}) = x 1_k for all k}. Throws E_NO_IDEAL_UNIT.
Invariants invariant_subalgebra(const AlgebraAction& act);

using GaloisPairs = std::vector<std::pair<Vector, Vector>>;

/// sum_i x_i beta_k(y_i 1_{k^-1}) = 1_p when k = id_p and 0 otherwise, for all k.
/// Throws E_NO_IDEAL_UNIT.
Verdict galois_check(const AlgebraAction& act, const GaloisPairs& pairs);

/// Solves for the tensor sum x_i (x) y_i linearly and factors it by rank, so a
/// returned system has at most dim B pairs. nullopt means no system of length
/// at most dim B exists. Throws E_NO_IDEAL_UNIT.
std::optional<GaloisPairs> find_galois_coordinates(const AlgebraAction& act);

/// The induced action of K on A#X with E_p spanned by the lines (i, x), x in Y_p.
struct GammaAction {
  SmashAlgebra smash;
  AlgebraAction action;
};

/// Throws E_NOT_SPLIT, E_NOT_SPLIT_K, E_NOT_UNITAL_DECOMP.
GammaAction gamma_action(const BiSet& biset, const GradedAlgebra& ga);

struct FixedOrbitReport {
  Index orbit_smash_dim = 0;
  Index image_dim = 0;
  Index invariant_dim = 0;
  bool equal = false;
  Subspace image;
  Subspace invariants;
};

/// phi*(A#O^K) against (A#X)^gamma as subspaces of A#X.
FixedOrbitReport fixed_vs_orbit_image(const BiSet& biset, const GradedAlgebra& ga);

}  // namespace gsm

#endif  // GSM_SKEW_HPP
