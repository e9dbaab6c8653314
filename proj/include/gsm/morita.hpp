#ifndef GSM_MORITA_HPP
#define GSM_MORITA_HPP

#include <gsm/smash.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gsm {

/// Left A-module M = sum of M_x with A_g M_x in M_{alpha_g(x)} (zero when x is
/// not in X_{d(g)}). deg assigns each module basis vector its point.
struct XGradedModule {
  GradedAlgebra algebra;
  GSetAction action;
  ModuleRep module;
  std::vector<Index> deg;
};

/// Throws E_XGRADING, E_NOT_SPLIT, E_MODULE.
XGradedModule validate_xgraded(GradedAlgebra ga, GSetAction action, ModuleRep module, std::vector<Index> deg);

/// (b_i delta_x) m = b_i m_x.
ModuleRep to_smash_module(const XGradedModule& m, const SmashAlgebra& s);
ModuleRep to_smash_module(const XGradedModule& m);

struct XGradedResult {
  XGradedModule graded;
  /// Set when the basis of V was not adapted to the idempotents 1_e delta_x;
  /// columns are the new basis in old coordinates.
  std::optional<Matrix> change_of_basis;
};

/// V_x = (1_e delta_x) V with A acting through eta.
XGradedResult to_xgraded(const SmashAlgebra& s, const ModuleRep& v);

/// Linear maps T : M -> N with T act_M(b) = act_N(b) T for every basis b,
/// optionally restricted to entries allowed by `mask` (row, col). Flattened
/// column-major.
Subspace module_homs(const ModuleRep& m, const ModuleRep& n, const std::vector<std::vector<bool>>* mask = nullptr);

/// Grading-preserving A-linear maps M -> N.
Subspace graded_homs(const XGradedModule& m, const XGradedModule& n);

/// G(F(V)) = V and F(G(M)) = M on the nose, plus equality of endomorphism
/// spaces on both sides.
Verdict roundtrip_check(const XGradedModule& m);
Verdict roundtrip_check(const SmashAlgebra& s, const ModuleRep& v);
/// Hom_(G,X,A)(M, N) = Hom_{A#X}(G M, G N) as subspaces of flattened maps.
Verdict morphism_compatibility(const XGradedModule& m, const XGradedModule& n);

/// Direct sum of one or two left ideals (A#X) c (1_e delta_x) of total
/// dimension at most `max_dim`, written in a basis adapted to the idempotents
/// and then twisted by a random block-diagonal change of basis.
ModuleRep random_smash_module(const SmashAlgebra& s, std::mt19937_64& rng, Index max_dim = 6);

struct SubalgebraSpan {
  Subspace space;
  StructureAlgebra algebra;
};

/// A^{G_x}. Throws E_NOT_SPLIT.
SubalgebraSpan stabilizer_subalgebra(const GradedAlgebra& ga, const GSetAction& action, Index x);

/// V_{x,y}: the components A_h with h from the object of x to the object of y and alpha_h(x) = y.
Subspace hom_component(const GradedAlgebra& ga, const GSetAction& action, Index x, Index y);

struct ContextChecks {
  Verdict w_bimodule;
  Verdict v_bimodule;
  Verdict round_morphism;
  Verdict square_morphism;
  Verdict assoc_round_first;   // (a, b) c = a [b, c] for a, c in V^x, b in ^xV
  Verdict assoc_square_first;  // [a, b] c = a (b, c) for a, c in ^xV, b in V^x
  bool ok() const {
    return w_bimodule && v_bimodule && round_morphism && square_morphism && assoc_round_first && assoc_square_first;
  }
};

/// The context (A#X, A^{G_x}, ^xV, V^x, (,), [,]) at a base point. ^xV and
/// V^x are spanned by A-basis elements; each carries the point it sits over.
struct MoritaContext {
  SmashAlgebra ring_c;
  StructureAlgebra ring_d;
  std::vector<Index> d_basis;  // A-basis indices of A^{G_x}
  std::vector<Index> w_basis;  // A-basis indices spanning ^xV
  std::vector<Index> w_point;
  std::vector<Index> v_basis;  // A-basis indices spanning V^x
  std::vector<Index> v_point;
  Index base_point = 0;

  ModuleRep c_on_w;  // left C-module
  ModuleRep w_by_d;  // right D-module
  ModuleRep d_on_v;  // left D-module
  ModuleRep v_by_c;  // right C-module
  /// round[j * |W| + i] = (v_j, w_i) in D coordinates.
  std::vector<Vector> round;
  /// square[i * |V| + j] = [w_i, v_j] in C coordinates.
  std::vector<Vector> square;
  ContextChecks checks;

  Index w_dim() const { return static_cast<Index>(w_basis.size()); }
  Index v_dim() const { return static_cast<Index>(v_basis.size()); }
};

/// Throws E_NOT_SPLIT.
MoritaContext build_morita_context(const GradedAlgebra& ga, const GSetAction& action, Index x);

struct StrictnessReport {
  bool square_surjective = false;
  bool round_surjective = false;
  /// (point, criterion) with the criterion compared against A_{id} at the point's object.
  std::vector<std::pair<Index, bool>> per_point;
  /// The same sums compared against the sum of all identity components.
  bool literal_criterion = false;
  bool morita_equivalent = false;
  bool all_points() const;
};

StrictnessReport strictness_report(const MoritaContext& ctx);

}  // namespace gsm

#endif  // GSM_MORITA_HPP
